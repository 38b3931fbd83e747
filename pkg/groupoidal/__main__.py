#!/usr/bin/env python

# Copyright (C) 2026 The groupoidal developers.
#
# Command-line front end.

import argparse
import logging
import sys
import traceback

from . import conductor, entities, exceptions, loader, name, termoutput, \
    version

COMMANDS = ['analyze', 'cosets', 'groupoid', 'actions', 'reps', 'export-dot']


def create_parser():
    """Create the groupoidal argument parser."""
    parser = argparse.ArgumentParser(prog=name, description=(
        '{} v{}, finite inverse semigroup toolkit.'.format(
            name.title(), version)))
    parser.add_argument(
        '--version', action='version',
        version='{}-{}'.format(name, version),
        help='show program version and exit')

    subparsers = parser.add_subparsers(
        dest='command', metavar='{{{}}}'.format(','.join(COMMANDS)))
    subparsers.required = True

    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument(
        '-i', '--input', metavar='PATH',
        help='read the semigroup from PATH (YAML or JSON, - for stdin)')
    source.add_argument(
        '-b', '--builtin', metavar='NAME:ARG',
        help=('use a built-in family: inverse_symmetric:N, chain:N, '
              'brandt:GROUP,N, group:GROUP, adjoin_identity:GROUP'))
    source.add_argument(
        '-j', '--job', metavar='FILE',
        help='read the whole job description from FILE')
    common.add_argument(
        '--field', default='q', metavar='FIELD',
        help='scalar field, q or gf:p (defaults to q)')
    common.add_argument(
        '--max-cosets', metavar='N', type=int, default=None,
        help='cap on the number of cosets of K(S)')
    common.add_argument(
        '--max-dim', metavar='N', type=int, default=None,
        help='cap on representation dimensions')
    common.add_argument(
        '--verification-primes', metavar='P,Q', default=None,
        help='primes used to certify simplicity (defaults to 5,7)')
    common.add_argument(
        '-o', '--out', metavar='DIR', default=conductor.DEFAULT_OUTPUT,
        help='output directory (defaults to ./{})'.format(
            conductor.DEFAULT_OUTPUT))
    common.add_argument(
        '--no-cache', action='store_true',
        help='neither read nor write the result cache')
    common.add_argument(
        '-v', '--verbose', action='store_true',
        help='log debug output to stderr')

    descriptions = {
        'analyze': 'Elements, idempotents and Green\'s relations',
        'cosets': 'Closed inverse subsemigroups, K(S) and L(S)',
        'groupoid': 'Paterson\'s groupoid and its local groups',
        'actions': 'Transitive actions, covers and strong congruences',
        'reps': 'Irreducible representations',
        'export-dot': 'DOT files of the groupoid and the action graphs',
    }
    for command in COMMANDS:
        subparsers.add_parser(
            parents=[common],
            name=command,
            description=descriptions[command],
            help=descriptions[command].lower())

    return parser


def _report_error(e):
    if sys.stderr.isatty():
        sys.stderr.write('{}: {}\n'.format(termoutput.red('ERROR'), e))
    sys.stderr.write(entities.dumps(e.to_dict()))


def _job(options):
    if options.job:
        config, base_dir = loader.load(options.job)
        return conductor.JobSpec.from_config(config, base_dir=base_dir,
                                             command=options.command)
    return conductor.JobSpec.from_options(options)


def execute(options, out=None):
    out = out or sys.stdout
    if options.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(
            '%(asctime)s %(name)s %(levelname)s: %(message)s'))
        root = logging.getLogger(name)
        root.addHandler(handler)
        root.setLevel(logging.DEBUG)

    try:
        c = conductor.Conductor(_job(options), out=out)
        for path in c.run():
            print(path, file=out)
        return 0
    except KeyboardInterrupt:
        pass
    except exceptions.GroupoidalException as e:
        _report_error(e)
        return e.exit_code
    except Exception:
        traceback.print_exc()
    return 1


def main(args=None, out=None):
    options = create_parser().parse_args(args)
    return execute(options, out=out)


if __name__ == '__main__':
    sys.exit(main())
