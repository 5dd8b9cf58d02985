"""
The ``taurank`` command line.

Exit codes:

    0   success, every example passed, no additivity violations
    1   some worked example failed
    2   quiver file, ideal file or command line error
    3   module file is malformed or violates a relation
    4   the supplied ideal does not annihilate the module
    10  the additivity scan found violations
"""
import argparse
import logging
import sys

from taurank.ar.hierarchy import hierarchy_report
from taurank.ar.reduction import reduce_and_compare
from taurank.ar.reduction import search_reduction
from taurank.ar.translate import tau
from taurank.ar.translate import tau_minus
from taurank.exceptions import IdealError
from taurank.exceptions import ModuleFileError
from taurank.exceptions import NotAnnihilatingError
from taurank.exceptions import NotFiniteDimensionalError
from taurank.exceptions import QuiverSyntaxError
from taurank.exceptions import RelationViolationError
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.field import Field
from taurank.modules.hom import hom_dim
from taurank.modules.homological import ext1_dim
from taurank.modules.io import load_module
from taurank.modules.iso import iso_test
from taurank.modules.io import module_to_json
from taurank.presentations.scan import additivity_scan
from taurank.scripts.worked_examples import RunOptions
from taurank.scripts.worked_examples import run_examples
from taurank.scripts.util import dump_json
from taurank.scripts.util import format_dims
from taurank.scripts.util import load_algebra
from taurank.scripts.util import load_ideal
from taurank.scripts.util import parse_multiplicities
from taurank.settings import load_settings
from taurank.settings import setup_logging


from typing import Any
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MODULE = 3
EXIT_IDEAL = 4
EXIT_VIOLATIONS = 10

# flags which override the INI settings of the same name
OVERRIDES = ('field', 'trials', 'seed', 'tmax', 'cap')


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog='taurank',
        description='Maximal ranks, τ-regularity and the AR translate '
                    'for bound quiver algebras'
    )
    parser.add_argument('--config', dest='config_uri',
                        help='INI file with a [taurank] section')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG')
    parser.add_argument('--field', help='q or fp:<prime>')
    parser.add_argument('--trials', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--tmax', type=int)
    parser.add_argument('--cap', type=int,
                        help='longest projective resolution to compute')
    parser.add_argument('--json', action='store_true',
                        help='print a JSON report')

    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('info', help='dimensions of an algebra')
    command.add_argument('algebra')

    command = commands.add_parser('check', help='hierarchy of a module')
    command.add_argument('algebra')
    command.add_argument('module')

    command = commands.add_parser('scan', help='additivity of r(P1^t, P0^t)')
    command.add_argument('algebra')
    command.add_argument('--p1', required=True, help='e.g. 0,1,0')
    command.add_argument('--p0', required=True, help='e.g. 0,0,1')

    command = commands.add_parser('reduce', help='compare M over A and A/I')
    command.add_argument('algebra')
    command.add_argument('module')
    command.add_argument('--ideal',
                         help='ideal file, the annihilator if omitted')
    command.add_argument('--search', action='store_true',
                         help='also list ideals with proj.dim <= 1')

    command = commands.add_parser('hom', help='dim Hom(M, N)')
    command.add_argument('algebra')
    command.add_argument('module')
    command.add_argument('other')

    command = commands.add_parser('iso', help='is M isomorphic to N')
    command.add_argument('algebra')
    command.add_argument('module')
    command.add_argument('other')

    command = commands.add_parser('tau', help='the AR translate')
    command.add_argument('algebra')
    command.add_argument('module')
    command.add_argument('--inverse', action='store_true',
                         help='compute τ⁻ instead of τ')

    command = commands.add_parser('ext1', help='dim Ext¹(M, N)')
    command.add_argument('algebra')
    command.add_argument('module')
    command.add_argument('other')

    commands.add_parser('paper-examples',
                        help='replay the worked examples')
    return parser.parse_args(argv[1:])


def resolve_settings(args: argparse.Namespace) -> dict[str, Any]:
    settings = load_settings(args.config_uri)
    for key in OVERRIDES:
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    return settings


def setup_sentry(settings: dict[str, Any]) -> None:
    sentry_dsn = settings.get('sentry_dsn')
    if sentry_dsn:
        import sentry_sdk
        sentry_sdk.init(
            dsn=sentry_dsn,
            environment=settings['sentry_environment'],
        )


def open_algebra(
    args:     argparse.Namespace,
    settings: dict[str, Any]
) -> 'Algebra':
    return load_algebra(args.algebra, settings['field'], settings['max_len'])


def emit(args: argparse.Namespace, data: Any, text: str) -> None:
    print(dump_json(data) if args.json else text)


def info(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    data = algebra.describe()
    n = algebra.vertex_count
    text = '\n'.join((
        f'dim A = {algebra.dim}; P: ' + ' '.join(
            format_dims(algebra.projective_dims(v)) for v in range(n)
        ),
        'I: ' + ' '.join(
            format_dims(algebra.injective_dims(v)) for v in range(n)
        ),
        f'dim rad A = {data["radical_dim"]}',
    ))
    emit(args, data, text)
    return EXIT_OK


def check(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    module = load_module(algebra, args.module)
    report = hierarchy_report(
        module,
        trials=settings['trials'],
        seed=settings['seed'],
        cap=settings['cap'],
        sample_range=settings['sample_range'],
        oracle_max_params=settings['oracle_max_params'],
        oracle_max_dim=settings['oracle_max_dim'],
        iso_attempts=settings['iso_attempts']
    )
    data = {'dim': list(module.dims), 'hierarchy': report.to_json()}
    lines = [f'dim M = {format_dims(module.dims)}']
    lines.extend(
        f'{label}: {"yes" if value else "no"}'
        for label, value in (
            ('projective', report.projective),
            ('proj.dim <= 1', report.pd_at_most_one),
            ('rigid', report.rigid),
            ('τ-rigid', report.tau_rigid),
            ('partial tilting', report.partial_tilting),
        )
    )
    lines.append(f'τ-regular: {report.tau_regular}')
    if report.tau_regular.note:
        lines.append(f'  {report.tau_regular.note}')
    lines.append(f'proj.dim: {report.proj_dim}')
    lines.append(f'e(M) = {report.e}, E(M) = {report.E}')
    emit(args, data, '\n'.join(lines))
    return EXIT_OK


def scan(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    report = additivity_scan(
        algebra,
        parse_multiplicities(args.p1, algebra),
        parse_multiplicities(args.p0, algebra),
        t_max=settings['tmax'],
        trials=settings['trials'],
        seed=settings['seed'],
        sample_range=settings['sample_range'],
        oracle_max_params=settings['oracle_max_params'],
        oracle_max_dim=settings['oracle_max_dim']
    )
    lines = [
        f'r(P1^{t}, P0^{t}) = {value}'
        + ('' if certified else ' (uncertified)')
        for t, (value, certified) in enumerate(
            zip(report.r, report.certified), start=1
        )
    ]
    lines.append(f'violations: {report.violations or "none"}')
    if report.candidates:
        lines.append(f'unconfirmed, r_1 is uncertified: {report.candidates}')
    emit(args, report.to_json(), '\n'.join(lines))
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def reduce(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    module = load_module(algebra, args.module)
    ideal = load_ideal(algebra, args.ideal) if args.ideal else None
    report = reduce_and_compare(
        module, ideal,
        trials=settings['trials'],
        seed=settings['seed'],
        cap=settings['cap'],
        iso_attempts=settings['iso_attempts']
    )
    data = report.to_json()
    lines = [
        f'I = ({", ".join(report.ideal.describe()["basis"])})',
        f'B = A/I: {report.quotient!r}',
        f'proj.dim: {report.pd_A} over A, {report.pd_B} over B',
        f'e: {report.e_A} -> {report.e_B}, E: {report.E_A} -> {report.E_B}',
        f'τ-regular: {report.regular_A} over A, {report.regular_B} over B',
    ]
    if args.search:
        candidates = search_reduction(
            module, settings['cap'], settings['iso_attempts']
        )
        data['search'] = [c.to_json() for c in candidates]
        lines.append(f'{len(candidates)} ideals with proj.dim <= 1:')
        lines.extend(
            f'  ({", ".join(c.ideal.describe()["basis"])}): {c.proj_dim}'
            for c in candidates
        )
    emit(args, data, '\n'.join(lines))
    return EXIT_OK


def hom(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    value = hom_dim(load_module(algebra, args.module),
                    load_module(algebra, args.other))
    emit(args, {'hom_dim': value}, f'dim Hom(M, N) = {value}')
    return EXIT_OK


def iso(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    value = iso_test(
        load_module(algebra, args.module),
        load_module(algebra, args.other),
        attempts=settings['iso_attempts'],
        exhaustive_params=settings['iso_exhaustive_params'],
        seed=settings['seed'],
        sample_range=settings['sample_range']
    )
    emit(args, {'isomorphic': value},
         'M ≅ N' if value else 'M and N are not isomorphic')
    return EXIT_OK


def translate(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    module = load_module(algebra, args.module)
    result = tau_minus(module) if args.inverse else tau(module)
    name = 'τ⁻M' if args.inverse else 'τM'
    emit(args, module_to_json(result, args.algebra),
         f'dim {name} = {format_dims(result.dims)}')
    return EXIT_OK


def ext1(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    algebra = open_algebra(args, settings)
    value = ext1_dim(load_module(algebra, args.module),
                     load_module(algebra, args.other))
    emit(args, {'ext1_dim': value}, f'dim Ext¹(M, N) = {value}')
    return EXIT_OK


def replay_examples(args: argparse.Namespace, settings: dict[str, Any]) -> int:
    results = run_examples(RunOptions.from_settings(settings))
    passed = all(r.passed for r in results)
    lines = [
        f'{"PASS" if r.passed else "FAIL"}  {r.name}: {r.detail}'
        for r in results
    ]
    lines.append(f'{sum(r.passed for r in results)}/{len(results)} passed')
    emit(args, {'passed': passed, 'examples': [r.to_json() for r in results]},
         '\n'.join(lines))
    return EXIT_OK if passed else EXIT_FAILED


COMMANDS = {
    'info': info,
    'check': check,
    'scan': scan,
    'reduce': reduce,
    'hom': hom,
    'iso': iso,
    'tau': translate,
    'ext1': ext1,
    'paper-examples': replay_examples,
}


def fail(code: int, exc: Exception) -> int:
    print(f'taurank: {exc}', file=sys.stderr)
    return code


def main(argv: list[str] = sys.argv) -> int:
    args = parse_args(argv)
    setup_logging(args.config_uri, args.verbose)
    try:
        settings = resolve_settings(args)
        settings['field'] = Field.from_spec(settings['field'])
    except ValueError as exc:
        return fail(EXIT_USAGE, exc)
    setup_sentry(settings)
    logger.debug('settings: %s', settings)

    try:
        return COMMANDS[args.command](args, settings)
    except NotAnnihilatingError as exc:
        return fail(EXIT_IDEAL, exc)
    except (ModuleFileError, RelationViolationError) as exc:
        return fail(EXIT_MODULE, exc)
    except (QuiverSyntaxError, NotFiniteDimensionalError, IdealError,
            ShapeMismatchError, OSError) as exc:
        return fail(EXIT_USAGE, exc)


if __name__ == '__main__':
    sys.exit(main())
