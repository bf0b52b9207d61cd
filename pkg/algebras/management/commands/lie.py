"""
``python manage.py lie <subcommand> ...``

Prints a JSON report on stdout. Exit status: 0 pass, 1 the computation
ran and the mathematical check failed, 2 usage or literal errors.
"""

import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from algebras import reports
from algebras.algebra_core import AlgebraId, check_same_algebra
from algebras.exceptions import AlgebraError
from algebras.serializers import (
    ApplySerializer, BracketSerializer, ClassifySerializer, DecomposeSerializer,
    SolveDerivationSerializer, TwoLocalVerifySerializer, WitnessSerializer,
)

logger = logging.getLogger(__name__)

ALGEBRAS = [a.value for a in AlgebraId]


class UsageParser(CommandParser):
    def error(self, message):
        raise CommandError(f"Error: {message}", returncode=2)


def _read(path):
    try:
        return Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise CommandError(f"cannot read {path}: {getattr(exc, 'strerror', None) or exc}", returncode=2)


def _content_lines(text):
    return [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith('#')]


def _lines(path):
    return _content_lines(_read(path))


def _map_source(argument):
    """``--map`` is a JSON literal, a file holding one, or a table file."""
    if argument.lstrip().startswith('{'):
        text = argument
    elif Path(argument).is_file():
        text = _read(argument)
    else:
        raise CommandError(f"--map {argument!r} is neither a JSON literal nor a file", returncode=2)
    if text.lstrip().startswith('{'):
        try:
            return {'map': json.loads(text)}
        except json.JSONDecodeError as exc:
            raise CommandError(f"--map is not valid JSON: {exc}", returncode=2)
    return {'table': _content_lines(text)}


def _validated(serializer_class, data):
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise CommandError(json.dumps(serializer.errors), returncode=2)
    return serializer.validated_data


class Command(BaseCommand):
    help = 'Exact computations on W(2,2) and the thin Lie algebra, reported as JSON.'

    def add_arguments(self, parser):
        sub = parser.add_subparsers(dest='subcommand', required=True, parser_class=UsageParser)
        default_window = settings.LIE_WORKBENCH['DEFAULT_WINDOW']

        bracket = sub.add_parser('bracket', help='bracket of two elements')
        bracket.add_argument('--algebra', choices=ALGEBRAS, required=True)
        bracket.add_argument('a')
        bracket.add_argument('b')

        apply = sub.add_parser('apply', help='apply a derivation literal')
        apply.add_argument('--derivation', required=True, help='JSON derivation literal')
        apply.add_argument('element')

        solve = sub.add_parser('solve-der', help='derivation space of a window')
        solve.add_argument('--algebra', choices=ALGEBRAS, required=True)
        solve.add_argument('--window', type=int, default=default_window)

        witness = sub.add_parser('witness', help='derivation matching two values')
        witness.add_argument('--algebra', choices=ALGEBRAS, required=True)
        for name in ('x', 'vx', 'y', 'vy'):
            witness.add_argument(f'--{name}', required=True)
        witness.add_argument('--window', type=int, default=default_window)

        verify = sub.add_parser('verify-2local', help='witness search over all probe pairs')
        verify.add_argument('--map', required=True, help='two-local JSON literal or table file')
        verify.add_argument('--probes', required=True, help='file with one element per line')
        verify.add_argument('--window', type=int, default=default_window)
        verify.add_argument('--algebra', choices=ALGEBRAS)

        decompose = sub.add_parser('decompose-w22', help='rebuild a W(2,2) table as a derivation')
        decompose.add_argument('--map', required=True, help='table file, one "<element> => <element>" per line')
        decompose.add_argument('--verify', required=True, help='file with one element per line')
        decompose.add_argument('--window', type=int, default=default_window)

        classify = sub.add_parser('classify-thin', help='recover delta + Omega from a thin map')
        classify.add_argument('--map', required=True, help='two-local JSON literal or table file')
        classify.add_argument('--window', type=int, default=default_window)
        classify.add_argument('--algebra', choices=ALGEBRAS)

        reproduce = sub.add_parser('reproduce', help='run acceptance cases')
        reproduce.add_argument('--case', required=True, choices=reports.case_ids())
        reproduce.add_argument('--seed', type=int)

    def handle(self, *args, **options):
        handler = getattr(self, 'handle_' + options['subcommand'].replace('-', '_'))
        logger.debug("lie %s", options['subcommand'])
        try:
            report = handler(options)
        except AlgebraError as exc:
            raise CommandError(str(exc), returncode=2)
        self.stdout.write(report.render())
        if not report.passed:
            raise CommandError(f"{options['subcommand']}: check failed", returncode=1)

    def handle_bracket(self, options):
        data = _validated(BracketSerializer, {'algebra': options['algebra'], 'a': options['a'], 'b': options['b']})
        check_same_algebra(data['a'], data['b'])
        return reports.bracket_report(data['a'], data['b'])

    def handle_apply(self, options):
        try:
            literal = json.loads(options['derivation'])
        except json.JSONDecodeError as exc:
            raise CommandError(f"--derivation is not valid JSON: {exc}", returncode=2)
        data = _validated(ApplySerializer, {'derivation': literal, 'element': options['element']})
        return reports.apply_report(data['derivation']['derivation'], data['element'])

    def handle_solve_der(self, options):
        data = _validated(SolveDerivationSerializer, {'algebra': options['algebra'], 'window': options['window']})
        return reports.derivation_space_report(AlgebraId(data['algebra']), data['window'])

    def handle_witness(self, options):
        data = _validated(WitnessSerializer, {k: options[k] for k in ('algebra', 'x', 'vx', 'y', 'vy', 'window')})
        return reports.witness_report(
            AlgebraId(data['algebra']), data['x'], data['vx'], data['y'], data['vy'], data['window'])

    def handle_verify_2local(self, options):
        payload = {**_map_source(options['map']), 'probes': _lines(options['probes']), 'window': options['window']}
        if options['algebra']:
            payload['algebra'] = options['algebra']
        data = _validated(TwoLocalVerifySerializer, payload)
        return reports.two_local_report(data['oracle'], data['probes'], data['window'])

    def handle_decompose_w22(self, options):
        data = _validated(DecomposeSerializer, {
            'table': _lines(options['map']), 'verify': _lines(options['verify']), 'window': options['window']})
        return reports.decompose_report(data['table'], data['window'], data['verify'])

    def handle_classify_thin(self, options):
        payload = {**_map_source(options['map']), 'window': options['window']}
        if options['algebra']:
            payload['algebra'] = options['algebra']
        data = _validated(ClassifySerializer, payload)
        return reports.classify_report(data['oracle'], data['window'])

    def handle_reproduce(self, options):
        return reports.reproduce(options['case'], options['seed'])
