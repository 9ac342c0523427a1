"""
Main entry point for the qgenocchi CLI
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

import sys

from . import commands
from .audit import GRID_OVERRIDES
from .cli import parse_arguments
from .errors import QGenocchiError
from .qcore import WeightPair
from .tables import render


def _print_banner():
    print("qgenocchi - Exact modified q-Genocchi numbers with weight, and audits of their identities.", file=sys.stderr)
    print("License: LGPL-2.1-only", file=sys.stderr)
    print("", file=sys.stderr)
    print("Usage:", file=sys.stderr)
    print("  qgenocchi numbers --n-max 8 --q 1/2", file=sys.stderr)
    print("  qgenocchi audit --suite all", file=sys.stderr)
    print("", file=sys.stderr)
    print("For help on options:", file=sys.stderr)
    print("  qgenocchi --help", file=sys.stderr)


def _dispatch(args):
    """Run one subcommand; returns (table, exit status)."""
    weights = WeightPair(getattr(args, 'alpha', None) or 1, getattr(args, 'beta', None) or 1)

    if args.command == 'numbers':
        return commands.cmd_numbers(args.n_max, weights, args.q), 0
    if args.command == 'poly':
        return commands.cmd_poly(args.n_max, weights, args.q, x=args.x, y=args.y), 0
    if args.command == 'euler':
        return commands.cmd_euler(args.n_max, args.q, x=args.x, y=args.y), 0
    if args.command == 'classical':
        return commands.cmd_classical(args.n_max, x=args.x), 0
    if args.command == 'limit':
        table = commands.cmd_limit(args.n_max, weights, x=args.x)
        return table, 0 if all(row['match'] for row in table.rows) else 1
    if args.command == 'zeta':
        return commands.cmd_zeta(args.s, args.x, weights, args.q, tol=args.tol, dps=args.dps), 0
    if args.command == 'witt':
        table, report = commands.cmd_witt(args.p, args.q, args.precision, args.n, args.level, weights, x=args.x)
        return table, 0 if report.passed else 1
    if args.command == 'audit':
        table, result = commands.cmd_audit(
            suites=args.suite,
            orientation=args.orientation,
            overrides={name: getattr(args, name) for name in GRID_OVERRIDES},
            n_max=args.n_max,
            workers=args.workers,
            json_output=args.format == 'json',
            stats_only=args.stats_only,
            quiet=args.quiet,
            log_file=args.log_file,
        )
        return table, result.exit_code
    raise ValueError(f"Unknown command: {args.command}")


def main(argv=None):
    """Main entry point for the qgenocchi CLI."""
    args = parse_arguments(argv)

    if not args.command:
        _print_banner()
        sys.exit(1)

    try:
        table, status = _dispatch(args)
    except (QGenocchiError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    except KeyboardInterrupt:
        print("\nQGEN Interrupted by user", file=sys.stderr)
        sys.exit(130)

    sys.stdout.write(render(table, args.format))
    sys.stdout.flush()
    sys.exit(status)


if __name__ == "__main__":
    main()
