# Copyright (C) 2026 The groupoidal developers.
#
# Dependency-ordered, concurrent execution of the computations of a job.

import sys
import threading
import time

from . import tasks
from .. import audit
from .. import exceptions
from .. import termoutput
from ..termoutput import columns, red, supports_color


class ComputationPlay(object):
    """Runs the tasks of a job, each in its own thread, starting a task only
    once every task it requires has completed.

    The first failure aborts the tasks that have not started yet and is
    re-raised, with its traceback, when the play ends.
    """

    _COLUMNS = columns()
    _NAME_CSIZE = min(20, max(10, int((_COLUMNS - 60) / 3)))

    HEADER_FMT = '{{:>3s}}  {{:<{}.{}s}} {{:<20.20s}} '.format(
        _NAME_CSIZE, _NAME_CSIZE) + tasks.TASK_RESULT_FMT
    HEADERS = ['  #', 'COMPUTATION', 'SEMIGROUP', 'STATUS']

    LINE_FMT = ('{{:>3d}}. {}{{:<{}.{}s}}{} {{:<20.20s}}'
                .format('\033[1m' if supports_color() else '',
                        _NAME_CSIZE, _NAME_CSIZE,
                        '\033[0m' if supports_color() else ''))

    def __init__(self, names, context, concurrency=None, auditor=None,
                 out=sys.stdout):
        self._names = self._with_dependencies(names)
        self._context = context
        self._concurrency = threading.Semaphore(
            concurrency or len(self._names))
        self._auditor = auditor
        self._out = out

        self._om = termoutput.OutputManager(len(self._names), out=out)
        self._tasks = {}
        for order, name in enumerate(self._names):
            o = self._om.get_formatter(order, prefix=(
                ComputationPlay.LINE_FMT.format(
                    order + 1, name, context.semigroup.name)))
            self._tasks[name] = tasks.TASKS[name](o, context)
        self._workers = []
        self._done = set()
        self._error = None
        self._cv = threading.Condition()

    @staticmethod
    def _with_dependencies(names):
        """The requested tasks and everything they require, dependencies
        first."""
        ordered = []

        def visit(name):
            if name not in tasks.TASKS:
                raise exceptions.JobConfigurationException(
                    'Unknown computation {}'.format(name))
            for dependency in tasks.TASKS[name].requires:
                visit(dependency)
            if name not in ordered:
                ordered.append(name)

        for name in names:
            visit(name)
        return ordered

    @property
    def tasks(self):
        return self._tasks

    def artifacts(self):
        """{filename: text} from every task that is not internal."""
        result = {}
        for task in self._tasks.values():
            if not task.internal:
                result.update(task.artifacts)
        return result

    def _ready(self, task):
        return self._error is not None or \
            all(name in self._done for name in task.requires)

    def _work(self, task):
        task.o.pending('waiting...')
        with self._cv:
            self._cv.wait_for(lambda: self._ready(task))
            if self._error is not None:
                task.o.commit(red('aborted!'))
                return
        try:
            with self._concurrency:
                task.run(auditor=self._auditor)
        except Exception:
            task.o.commit(red('failed!'))
            with self._cv:
                if self._error is None:
                    self._error = sys.exc_info()
                self._cv.notify_all()
        else:
            with self._cv:
                self._done.add(task.name)
                self._cv.notify_all()

    def register(self, task):
        """Start the worker thread of a task; it runs the task once its
        requirements are done."""
        worker = threading.Thread(target=self._work, args=(task,),
                                  name='task-{}'.format(task.name))
        worker.daemon = True
        worker.start()
        self._workers.append(worker)

    def _interrupt(self, error):
        with self._cv:
            if self._error is None:
                self._error = error
            self._cv.notify_all()

    def _start(self):
        self._started_at = time.time()
        if self._auditor:
            self._auditor.started(audit.INFO, 'job', self._names)
        print(ComputationPlay.HEADER_FMT.format(*ComputationPlay.HEADERS),
              file=self._out)
        self._om.start()

    def _end(self):
        try:
            for worker in self._workers:
                while worker.is_alive():
                    worker.join(0.5)
        except KeyboardInterrupt:
            abort = exceptions.GroupoidalException('Manual abort')
            self._interrupt((type(abort), abort, None))
        self._om.end()

        if self._error is None:
            if self._auditor:
                self._auditor.finished(audit.INFO, 'job', self._names,
                                       time.time() - self._started_at)
            return
        if self._auditor:
            self._auditor.failed('job', self._names, str(self._error[1]))
        exceptions.raise_with_tb(self._error)

    def run(self):
        self._start()
        for name in self._names:
            self.register(self._tasks[name])
        self._end()
        return self.artifacts()
