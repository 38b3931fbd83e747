# Copyright (C) 2026 The groupoidal developers.
#
# Colored status lines for the computations of a job.

import functools
import os
import re
import shutil
import sys
import threading

ANSI_SEQUENCE = re.compile(r'\033\[[0-9;]*[A-Za-z]')
DEFAULT_TERM_COLUMNS = 120

_PALETTE = {
    'red': 31,
    'green': 32,
}


def supports_color(out=sys.stdout):
    isatty = getattr(out, 'isatty', None)
    return bool(isatty and isatty()) or 'ANSICON' in os.environ


def strip_colors(s):
    return ANSI_SEQUENCE.sub('', s)


def paint(name, s):
    return '\033[{};1m{}\033[;0m'.format(_PALETTE[name], s)


red = functools.partial(paint, 'red')
green = functools.partial(paint, 'green')


def columns():
    """Width available for the status table; COLUMNS wins over the
    terminal's own size."""
    if 'COLUMNS' in os.environ:
        return int(os.environ['COLUMNS'])
    if not supports_color(sys.stdout):
        return DEFAULT_TERM_COLUMNS
    return shutil.get_terminal_size((DEFAULT_TERM_COLUMNS, 24)).columns


def elapsed(seconds):
    """Short human form of a duration in seconds."""
    if seconds < 1:
        return '{}ms'.format(int(seconds * 1000))
    if seconds < 60:
        return '{:.1f}s'.format(seconds)
    minutes, seconds = divmod(int(seconds), 60)
    return '{}m{}s'.format(minutes, seconds)


class OutputManager(object):
    """A block of status lines, one per computation of a play.

    On a terminal the block is reserved up front and every line is redrawn
    in place as its computation progresses. Elsewhere only committed text is
    written, one plain line per commit, in the order commits happen.
    """

    def __init__(self, lines, out=sys.stdout):
        self._lines = lines
        self._out = out
        self._live = supports_color(out)
        self._lock = threading.Lock()

    def get_formatter(self, pos, prefix=None):
        return OutputFormatter(functools.partial(self._draw, pos),
                               prefix=prefix)

    def start(self):
        if self._live:
            self._write('\n' * self._lines + '\033[{}A'.format(self._lines))

    def end(self):
        if self._live:
            self._write('\033[{}B'.format(self._lines))

    def _write(self, s):
        with self._lock:
            self._out.write(s)
            self._out.flush()

    def _draw(self, pos, text, committed):
        if not self._live:
            if committed:
                self._write(strip_colors(text) + '\n')
            return
        down = '\033[{}B'.format(pos) if pos else ''
        up = '\033[{}A'.format(pos) if pos else ''
        self._write('{}\r{}\033[K\r{}'.format(down, text, up))


class OutputFormatter(object):
    """One status line: a committed part that only grows, followed by a
    transient note that the next update replaces."""

    def __init__(self, printer, prefix=None):
        self._printer = printer
        self._parts = [prefix] if prefix else []

    @property
    def text(self):
        return ' '.join(self._parts)

    def commit(self, *parts):
        """Append the parts to the committed line and show it."""
        self._parts.extend(p for p in parts if p)
        self._printer(self.text, True)

    def pending(self, note):
        """Show a note after the committed line without keeping it."""
        if note:
            self._printer(' '.join(self._parts + [note]), False)
