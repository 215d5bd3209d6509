"""Command line interface to the weier4 minimal surface toolkit."""
import argparse
import logging
import sys
import numpy as np
from .config import apply_config
from .config import load_config
from .export import export
from .export import format_for_path
from .expr import parse_holo
from .family import FamilyParams
from .family import family_m
from .family import family_pair
from .family import match_patches
from .family import pipeline_patch
from .family import verify_family
from .._errors import NotGeneralTypeError
from .._errors import Weier4Error
from .._grid import GridSpec
from ..canonize import to_canonical
from ..correspond import build_r3
from ..correspond import closed_form_fields
from ..correspond import equivalent_pairs
from ..correspond import natural_residual_r3
from ..correspond import natural_residual_r4
from ..correspond import nu_field
from ..correspond import nu_r3
from ..correspond import principal_curvature_r3
from ..correspond import ScalarField
from ..curvature import curvatures_closed_form
from ..curvature import ellipse_invariants
from ..curvature import sample_grid
from ..curvature import sample_point
from ..geometry import eval_patch
from ..geometry import harmonic_residual
from ..geometry import integrate_phi
from ..series import DEFAULT_ORDER
from ..weierstrass import build_canonical
from ..weierstrass import build_representation
from ..weierstrass import HoloPair


_LOGGER = logging.getLogger(__name__)


# the subcommands and their help lines
COMMANDS = {
    'build': 'Build a surface patch and export it.',
    'curvature': 'Print K, kappa, nu, mu and E at a point.',
    'canonize': 'Reparametrize a surface to canonical coordinates.',
    'natural-check': 'Evaluate the residuals of the natural equations.',
    'family': 'Sample a member of the associated family M(k1, k2; alpha).',
    'verify-family': 'Check that the associated family shares K and kappa.',
    'equiv-check': 'Decide whether two g-pairs give the same curvatures.',
    'r3': 'Build the minimal surface in R^3 of one function g.',
}


# the grid of each command when --grid is not given
DEFAULT_GRIDS = {
    'natural-check': '-0.1:0.1:0.01',
    'verify-family': '-0.3:0.3:0.05',
}


# the grid of every other command
DEFAULT_GRID = '-0.2:0.2:0.02'


# the passing residuals of the natural equations
R3_TOLERANCE = 1e-3
R4_TOLERANCE = 5e-3


# the representations selected by --kind
KINDS = {
    'w1': ('W1', 'h'),
    'w2': ('W2', 'h'),
    'w5': ('W5', 'w'),
    'w6': ('W6', 'g'),
    'canonical-h': (None, 'h'),
    'canonical-w': (None, 'w'),
    'canonical-g': (None, 'g'),
}


# flags whose values may start with a dash
VALUE_FLAGS = frozenset(
    '--' + name for name in (
        'g1', 'g2', 'h1', 'h2', 'w1', 'w2', 'f', 'grid', 'grid-v', 'at',
        'alpha', 'alphas', 'g1-other', 'g2-other',
    )
)


class UsageError(Exception):
    """The command line is well formed but misses required input."""


def _common_parser():
    """Return the parser of the flags shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    # add the arguments for the holomorphic input functions
    for name in ('g1', 'g2', 'h1', 'h2', 'w1', 'w2'):
        parser.add_argument('--' + name,
            type=str,
            help='The expression of {} in the variable z.'.format(name),
        )
    # add the argument for the scalar factor of general representations
    parser.add_argument('--f',
        type=str,
        default='1',
        help='The expression of the factor f of the general representations.',
    )
    # add the argument for the representation to build
    parser.add_argument('--kind',
        type=str,
        choices=sorted(KINDS),
        help='The representation (default: canonical of the given pair).',
    )
    # add the arguments for the parameter grid
    parser.add_argument('--grid',
        type=str,
        help='The u range as lo:hi:h (also used for v).',
    )
    parser.add_argument('--grid-v',
        type=str,
        help='The v range as lo:hi when it differs from the u range.',
    )
    # add the argument for the evaluation point
    parser.add_argument('--at',
        type=str,
        default='0,0',
        help='The parameter point as u,v.',
    )
    # add the argument for the truncation order of every series
    parser.add_argument('--order',
        type=int,
        default=DEFAULT_ORDER,
        help='The truncation order of the Taylor series.',
    )
    # add the arguments for the output file
    parser.add_argument('--out',
        type=str,
        help='The output path.',
    )
    parser.add_argument('--format',
        type=str,
        choices=['ply', 'obj', 'csv', 'curvature-json'],
        help='The output format (default: from the --out suffix).',
    )
    parser.add_argument('--project',
        type=str,
        default='xyz',
        choices=['xyz', 'xyw', 'xzw', 'yzw', 'none'],
        help='The three coordinates kept by mesh formats.',
    )
    # add the arguments for diagnostics and configuration
    parser.add_argument('--verbose', '-v',
        action='store_true',
        help='Log diagnostics and show progress bars.',
    )
    parser.add_argument('--config',
        type=str,
        help='A key=value file of flag defaults.',
    )
    return parser


def _build_parser():
    """
    Build the command line parser.

    Returns:
        tuple: the top level parser and a dict of subcommand parsers

    """
    parser = argparse.ArgumentParser(prog='weier4', description=__doc__)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    common = _common_parser()
    commands = {}
    for name, text in COMMANDS.items():
        commands[name] = subparsers.add_parser(name, parents=[common], help=text)
    # add the argument for the canonical type to reach
    commands['canonize'].add_argument('--target',
        type=str,
        default='first',
        choices=['first', 'second'],
        help='The type of canonical coordinates.',
    )
    # add the arguments for stored fields and tolerances
    natural = commands['natural-check']
    for role in ('nu', 'K', 'kappa'):
        natural.add_argument('--' + role,
            type=str,
            help='A stored {} field to check instead of computing one.'.format(role),
        )
    for name in ('natural-check', 'verify-family'):
        commands[name].add_argument('--tol',
            type=float,
            help='The passing residual (default: the documented bound).',
        )
    # add the arguments for the associated family
    for name in ('family', 'verify-family'):
        commands[name].add_argument('--k1', type=float, default=1.0, help='The first rate.')
        commands[name].add_argument('--k2', type=float, default=2.0, help='The second rate.')
    commands['family'].add_argument('--alpha',
        type=str,
        default='0',
        help='The family parameter in [0, pi/4].',
    )
    commands['family'].add_argument('--compare',
        action='store_true',
        help='Compare the closed form against the canonical pipeline.',
    )
    commands['verify-family'].add_argument('--alphas',
        type=str,
        default='0,pi/8,pi/4',
        help='Comma separated family parameters, the reference first.',
    )
    # add the arguments for the second pair of the equivalence check
    for name in ('g1-other', 'g2-other'):
        commands['equiv-check'].add_argument('--' + name,
            type=str,
            help='The expression of the other pair.',
        )
    return parser, commands


def _attach_values(argv):
    """
    Join expression and range flags with their values.

    Values such as -0.2:0.2:0.02 or -z start with a dash and would be taken
    for flags by argparse, so they are passed as --grid=-0.2:0.2:0.02.

    Args:
        argv (list): the raw arguments

    Returns:
        list: the arguments with every value flag joined to its value

    """
    joined = []
    pending = None
    for argument in argv:
        if pending is not None:
            joined.append('{}={}'.format(pending, argument))
            pending = None
        elif argument in VALUE_FLAGS:
            pending = argument
        else:
            joined.append(argument)
    if pending is not None:
        joined.append(pending)
    return joined


def _parse_args(argv):
    """Parse the command line, installing config file defaults."""
    parser, commands = _build_parser()
    argv = _attach_values(list(argv))
    args = parser.parse_args(argv)
    if args.config:
        apply_config(commands[args.command], load_config(args.config))
        args = parser.parse_args(argv)
    return args


def _configure_logging(verbose):
    """Send diagnostics to stderr at INFO when verbose and WARNING otherwise."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format='%(levelname)s:%(name)s: %(message)s',
        stream=sys.stderr,
        force=True,
    )


#
# MARK: Input helpers
#


def _series(args, name):
    """Parse the expression given for a flag."""
    text = getattr(args, name.replace('-', '_'))
    if text is None:
        raise UsageError('missing --{}'.format(name))
    return parse_holo(text, 0j, args.order)


def _real(text):
    """Evaluate a constant expression such as 'pi/8' to a float."""
    return parse_holo(text, 0j, 0)[0].real


def _point(args):
    """Return the parameter point of --at."""
    try:
        u, v = (float(part) for part in args.at.split(','))
    except ValueError:
        raise UsageError("--at must be written as 'u,v': {!r}".format(args.at))
    return complex(u, v)


def _grid(args):
    """Return the parameter grid of the command."""
    text = args.grid or DEFAULT_GRIDS.get(args.command, DEFAULT_GRID)
    try:
        return GridSpec.parse(text, args.grid_v)
    except ValueError as error:
        raise UsageError(str(error))


def _kind(args):
    """Return the --kind of the command, inferred from the given pair."""
    if args.kind is not None:
        return args.kind
    for flavor in ('g', 'w', 'h'):
        if getattr(args, flavor + '1') is not None:
            return 'canonical-' + flavor
    raise UsageError('give a pair with --g1/--g2, --w1/--w2 or --h1/--h2')


def _pair(args, flavor):
    """Return the HoloPair of one flavor."""
    return HoloPair(_series(args, flavor + '1'), _series(args, flavor + '2'), flavor)


def _curve(args):
    """
    Build the curve Phi requested on the command line.

    Args:
        args (argparse.Namespace): the parsed arguments

    Returns:
        tuple: the PhiCurve and the HoloPair it was built from

    """
    form, flavor = KINDS[_kind(args)]
    pair = _pair(args, flavor)
    if form is None:
        phi = build_canonical(pair)
    else:
        phi = build_representation(form, _series(args, 'f'), pair)
    _LOGGER.info('max Phi^2 violation: %.3e', phi.isotropy_residual())
    return phi, pair


def _write(args, patch):
    """Export a patch when --out is given."""
    if args.out is None:
        return
    fmt = args.format or format_for_path(args.out)
    export(patch, fmt, args.project, args.out)
    print('wrote {}'.format(args.out))


def _attach_fields(patch, phi, verbose):
    """Attach the curvature fields of Phi when the patch is of general type."""
    try:
        fields = sample_grid(phi, patch.grid, progress=verbose)
    except NotGeneralTypeError as error:
        _LOGGER.warning('curvature fields omitted: %s', error)
        return
    fields.pop('E')
    patch.fields.update(fields)


#
# MARK: Subcommands
#


def _build(args):
    phi, _ = _curve(args)
    patch = eval_patch(integrate_phi(phi), _grid(args), progress=args.verbose)
    _attach_fields(patch, phi, args.verbose)
    _LOGGER.info('harmonic residual: %.3e', harmonic_residual(patch))
    _write(args, patch)
    return 0


def _curvature(args):
    phi, pair = _curve(args)
    t = _point(args)
    sample = sample_point(phi, t)
    for name in ('K', 'kappa', 'nu', 'mu', 'E'):
        print('{}={:.12g}'.format(name, getattr(sample, name)))
    if args.verbose and args.kind in (None, 'canonical-g', 'canonical-w', 'canonical-h'):
        kind = 'canonical_' + pair.flavor
        K, kappa = curvatures_closed_form(kind, None, pair, t)
        _LOGGER.info('closed form: K=%.12g kappa=%.12g', K, kappa)
    return 0


def _canonize(args):
    phi, _ = _curve(args)
    canonical, reparam = to_canonical(phi, args.target)
    for index, value in enumerate(reparam.forward.coeffs[:6]):
        print('forward[{}]={:.12g}{:+.12g}j'.format(index, value.real, value.imag))
    sign = 1 if args.target == 'first' else -1
    print("max |Phi'^2 - ({:+d})|={:.3e}".format(sign, canonical.canonical_residual(sign)))
    if args.out is not None:
        patch = eval_patch(integrate_phi(canonical), _grid(args), progress=args.verbose)
        _attach_fields(patch, canonical, args.verbose)
        _write(args, patch)
    return 0


def _natural_check(args):
    r3_tol = args.tol or R3_TOLERANCE
    r4_tol = args.tol or R4_TOLERANCE
    passed = True
    if args.nu or args.K or args.kappa:
        nus = [ScalarField.load(args.nu)] if args.nu else []
        pairs = []
        if args.K or args.kappa:
            if not (args.K and args.kappa):
                raise UsageError('--K and --kappa are checked together')
            pairs.append((ScalarField.load(args.K), ScalarField.load(args.kappa)))
    else:
        grid = _grid(args)
        pair = _pair(args, 'g')
        nus = [nu_field(g, grid) for g in pair]
        pairs = [closed_form_fields(pair, grid)]
        if args.out is not None:
            for name, field in zip(('nu1', 'nu2', 'K', 'kappa'), nus + list(pairs[0])):
                field.save('{}.{}.txt'.format(args.out, name))
    for index, nu in enumerate(nus, start=1):
        residual = natural_residual_r3(nu)
        passed = passed and residual < r3_tol
        print('r3[{}]={:.3e}'.format(index, residual))
    for K, kappa in pairs:
        first, second = natural_residual_r4(K, kappa)
        passed = passed and max(first, second) < r4_tol
        print('r4={:.3e},{:.3e}'.format(first, second))
    print('pass' if passed else 'fail')
    return 0 if passed else 1


def _family(args):
    params = FamilyParams(args.k1, args.k2, _real(args.alpha), _grid(args))
    patch = family_m(params)
    pair = family_pair(params, order=args.order)
    K, kappa = closed_form_fields(pair, params.grid)
    patch.fields.update(K=K.values, kappa=kappa.values)
    invariants = np.vectorize(ellipse_invariants)(K.values, kappa.values)
    patch.fields.update(nu=invariants[0], mu=invariants[1])
    if args.compare:
        report = match_patches(patch, pipeline_patch(params, args.order))
        print('sign={:+d}'.format(report.sign))
        print('translation=' + ','.join('{:.12g}'.format(x) for x in report.translation))
        print('max deviation={:.3e}'.format(report.max_deviation))
    _write(args, patch)
    return 0


def _verify_family(args):
    alphas = [_real(text) for text in args.alphas.split(',')]
    if len(alphas) < 2:
        raise UsageError('--alphas needs at least two values')
    report = verify_family(args.k1, args.k2, alphas, _grid(args), args.tol or 1e-8)
    for alpha, (dK, dkappa) in report.per_alpha.items():
        print('alpha={:.12g} dK={:.3e} dkappa={:.3e}'.format(alpha, dK, dkappa))
    print('max |dK|={:.3e}'.format(report.max_dK))
    print('max |dkappa|={:.3e}'.format(report.max_dkappa))
    print('pass' if report.passed else 'fail')
    return 0 if report.passed else 1


def _equiv_check(args):
    first = _pair(args, 'g')
    other = HoloPair(_series(args, 'g1-other'), _series(args, 'g2-other'), 'g')
    equivalent = equivalent_pairs(first, other, _grid(args))
    print('equivalent' if equivalent else 'not equivalent')
    return 0 if equivalent else 1


def _r3(args):
    g = _series(args, 'g1')
    phi3 = build_r3(g)
    t = _point(args)
    print('nu={:.12g}'.format(nu_r3(g, t)))
    print('nu_frame={:.12g}'.format(principal_curvature_r3(phi3, t)))
    patch = eval_patch(integrate_phi(phi3), _grid(args), progress=args.verbose)
    _LOGGER.info('harmonic residual: %.3e', harmonic_residual(patch))
    _write(args, patch)
    return 0


# the handler of every subcommand
_HANDLERS = {
    'build': _build,
    'curvature': _curvature,
    'canonize': _canonize,
    'natural-check': _natural_check,
    'family': _family,
    'verify-family': _verify_family,
    'equiv-check': _equiv_check,
    'r3': _r3,
}


def cli_run(argv):
    """
    Run the command line interface.

    Args:
        argv (list): the arguments after the program name

    Returns:
        int: 0 on success, 1 on validation failure, 2 on usage error

    """
    try:
        args = _parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    except (OSError, ValueError) as error:
        print('weier4: {}'.format(error), file=sys.stderr)
        return 2
    _configure_logging(args.verbose)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as error:
        print('weier4: {}'.format(error), file=sys.stderr)
        return 2
    except (Weier4Error, ValueError, OSError) as error:
        print('weier4: {}'.format(error), file=sys.stderr)
        return 1


def main():
    """The main entry point for the command line interface."""
    sys.exit(cli_run(sys.argv[1:]))


# explicitly define the outward facing API of this module
__all__ = [cli_run.__name__, main.__name__]
