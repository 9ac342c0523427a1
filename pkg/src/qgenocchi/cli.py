"""
Command Line Interface for qgenocchi
Copyright (C) 2026  qgenocchi contributors

This library is free software; you can redistribute it and/or
modify it under the terms of the GNU Lesser General Public
License as published by the Free Software Foundation; either
version 2.1 of the License, or (at your option) any later version.

This library is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with this library; if not, see <https://www.gnu.org/licenses/>.
"""

import argparse
from fractions import Fraction

from .audit import SUITES
from .qanalytic import parse_complex
from .qcore import Orientation
from .qpadic import require_odd_prime
from .tables import FORMATS


def rational(text):
    """argparse type for ``NUM/DEN`` (or plain integer/decimal) values"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a non-negative integer, got {value}")
    return value


def odd_prime(text):
    try:
        return require_odd_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_weights(parser):
    parser.add_argument('--alpha', type=positive_int, default=1, help='Weight alpha, deforms the bracket base (default: 1)')
    parser.add_argument('--beta', type=positive_int, default=1, help='Weight beta, deforms the measure (default: 1)')


def _add_format(parser):
    parser.add_argument('--format', choices=FORMATS, default='text',
                        help='Output format: text, json or csv (default: text)')


def _add_argument_point(parser):
    point = parser.add_mutually_exclusive_group()
    point.add_argument('--x', type=int, help='Integer polynomial argument x (y = q^x exactly)')
    point.add_argument('--y', type=rational, help='Polynomial argument given directly as y = q^x, NUM/DEN')


def build_parser():
    """The argument parser for every subcommand"""
    parser = argparse.ArgumentParser(
        prog='qgenocchi',
        description='Exact modified q-Genocchi numbers with weight, and audits of their identities.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Examples:
  qgenocchi numbers --n-max 8 --q 1/2 --alpha 2 --beta 1
  qgenocchi poly --n-max 5 --q 2/3 --x 2 --format json
  qgenocchi classical --n-max 12
  qgenocchi limit --n-max 6 --alpha 2 --beta 3
  qgenocchi zeta --s 2 --x 1 --q 0.999
  qgenocchi witt --p 3 --q 4 --n 2 --level 5
  qgenocchi audit --suite tail --orientation as_printed
  qgenocchi audit --suite all --workers 0 --stats-only
        '''
    )

    subparsers = parser.add_subparsers(dest='command', help='Commands')

    # Exact tables
    numbers = subparsers.add_parser('numbers', help='Table of g_{n,q}^(alpha,beta) for n = 0..n-max')
    numbers.add_argument('--n-max', type=non_negative_int, default=10, help='Largest index (default: 10)')
    numbers.add_argument('--q', type=rational, default=Fraction(1, 2), help='q as NUM/DEN, q != 1 (default: 1/2)')
    _add_weights(numbers)
    _add_format(numbers)

    poly = subparsers.add_parser('poly', help='Table of g_{n,q}^(alpha,beta)(x)')
    poly.add_argument('--n-max', type=non_negative_int, default=10, help='Largest index (default: 10)')
    poly.add_argument('--q', type=rational, default=Fraction(1, 2), help='q as NUM/DEN, q != 1 (default: 1/2)')
    _add_argument_point(poly)
    _add_weights(poly)
    _add_format(poly)

    euler = subparsers.add_parser('euler', help='Table of the modified q-Euler numbers')
    euler.add_argument('--n-max', type=non_negative_int, default=10, help='Largest index (default: 10)')
    euler.add_argument('--q', type=rational, default=Fraction(1, 2), help='q as NUM/DEN, q != 1 (default: 1/2)')
    _add_argument_point(euler)
    _add_format(euler)

    classical = subparsers.add_parser('classical', help='Classical Genocchi numbers from 2t/(e^t+1)')
    classical.add_argument('--n-max', type=non_negative_int, default=12, help='Largest index (default: 12)')
    classical.add_argument('--x', type=rational, help='Also tabulate the Genocchi polynomial at x')
    _add_format(classical)

    limit = subparsers.add_parser('limit', help='q -> 1 limits next to the classical values')
    limit.add_argument('--n-max', type=non_negative_int, default=12, help='Largest index (default: 12)')
    limit.add_argument('--x', type=int, help='Integer polynomial argument x')
    _add_weights(limit)
    _add_format(limit)

    # Analytic
    zeta = subparsers.add_parser('zeta', help='Weighted q-zeta value xi(s, x | q)')
    zeta.add_argument('--s', type=complex_arg, default=complex(2, 0), help='s as RE or RE,IM (default: 2)')
    zeta.add_argument('--x', type=rational, default=Fraction(1), help='x > 0 (default: 1)')
    zeta.add_argument('--q', default='1/2', help='q in (0, 1), NUM/DEN or decimal (default: 1/2)')
    zeta.add_argument('--tol', type=float, help='Relative truncation tolerance (default from defaults.json)')
    zeta.add_argument('--dps', type=positive_int, help='Decimal digits of working precision (default: 30)')
    _add_weights(zeta)
    _add_format(zeta)

    # p-adic
    witt = subparsers.add_parser('witt', help='p-adic Riemann sums against the closed form')
    witt.add_argument('--p', type=int, default=3, help='Odd prime p (default: 3)')
    witt.add_argument('--q', type=rational, help='q = 1 (mod p) as NUM/DEN (default: p + 1)')
    witt.add_argument('--n', type=non_negative_int, default=0, help='Moment index n (default: 0)')
    witt.add_argument('--x', type=int, default=0, help='Integer shift x of the polynomial form (default: 0)')
    witt.add_argument('--precision', type=positive_int, help='p-adic digits K (default from defaults.json)')
    witt.add_argument('--level', type=positive_int, default=3, help='Largest level N, sums over p^N terms (default: 3)')
    _add_weights(witt)
    _add_format(witt)

    # Audits
    audit = subparsers.add_parser('audit', help='Run identity audit suites')
    audit.add_argument('--suite', action='append', choices=SUITES + ('all',),
                       help='Suite to run, may be repeated (default: all)')
    audit.add_argument('--orientation', choices=[o.value for o in Orientation],
                       help='Tail identity ordering (default: both)')
    audit.add_argument('--n-max', type=non_negative_int, help='Cap the n range of every grid')
    grid = audit.add_argument_group('grid overrides', 'Replace entries of the default grids in defaults.json')
    grid.add_argument('--q', type=rational, help='Single q for the suites that list q values')
    grid.add_argument('--alpha', type=positive_int, help='Single weight alpha instead of the grid range')
    grid.add_argument('--beta', type=positive_int, help='Single weight beta instead of the grid range')
    grid.add_argument('--p', type=odd_prime, help='Single prime for the witt and lemma1 suites')
    grid.add_argument('--level', type=positive_int, help='Largest level N for the p-adic suites')
    grid.add_argument('--precision', type=positive_int, help='p-adic digits K for the p-adic suites')
    grid.add_argument('--tol', type=float, help='Tolerance for the analytic suites')
    audit.add_argument('--workers', type=non_negative_int, default=1,
                       help='Worker processes, 0 for one per physical core (default: 1)')
    audit.add_argument('--log-file', help='Log output to file')
    audit.add_argument('--quiet', action='store_true', help='Do not write progress to stderr')
    audit.add_argument('--stats-only', action='store_true',
                       help='Only show the summary, not individual cases')
    _add_format(audit)

    return parser


def parse_arguments(argv=None):
    """Parse command line arguments"""
    return build_parser().parse_args(argv)
