# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""One function per subcommand; each returns a :class:`~qgenocchi.tables.Table`.

The functions take parsed values rather than an argparse namespace so they
can be called from tests and other programs.
"""

from __future__ import annotations

from fractions import Fraction

from . import qanalytic, qcore, qlimits, qpadic
from .audit import AuditResult
from .config import analytic_defaults
from .errors import DegenerateQError
from .qcore import PolyArgument, QPoint, RationalLike, WeightPair, to_fraction
from .runner import AuditRunner
from .tables import Table


def _qpoint(q: RationalLike) -> QPoint:
    if to_fraction(q) == 1:
        raise DegenerateQError("degenerate q: q = 1 has no closed form, use `qgenocchi limit` for the q -> 1 values")
    return QPoint.of(q)


def _argument(q: QPoint, x: int | None, y: RationalLike | None) -> PolyArgument:
    if x is not None and y is not None:
        raise ValueError("give either x or y, not both")
    if y is not None:
        return PolyArgument(to_fraction(y))
    return PolyArgument.at(0 if x is None else x, q)


def cmd_numbers(n_max: int, w: WeightPair, q: RationalLike) -> Table:
    """g_{0..n_max,q}^{(alpha,beta)}."""
    qp = _qpoint(q)
    table = Table("numbers", {"n_max": n_max, "alpha": w.alpha, "beta": w.beta, "q": qp.q}, ["n", "g"])
    for n in range(n_max + 1):
        table.add(n=n, g=qcore.genocchi_number(n, w, qp))
    return table


def cmd_poly(n_max: int, w: WeightPair, q: RationalLike, x: int | None = None,
             y: RationalLike | None = None) -> Table:
    qp = _qpoint(q)
    arg = _argument(qp, x, y)
    params = {"n_max": n_max, "alpha": w.alpha, "beta": w.beta, "q": qp.q, "y": arg.y}
    if arg.x_label is not None:
        params["x"] = arg.x_label
    table = Table("poly", params, ["n", "g"])
    for n in range(n_max + 1):
        table.add(n=n, g=qcore.genocchi_polynomial(n, w, qp, arg))
    return table


def cmd_euler(n_max: int, q: RationalLike, x: int | None = None, y: RationalLike | None = None) -> Table:
    """Modified q-Euler numbers, plus the polynomial column when x or y is given."""
    qp = _qpoint(q)
    columns = ["n", "epsilon"]
    params: dict[str, object] = {"n_max": n_max, "q": qp.q}
    arg = None
    if x is not None or y is not None:
        arg = _argument(qp, x, y)
        params["y"] = arg.y
        columns.append("epsilon_x")
    table = Table("euler", params, columns)
    for n in range(n_max + 1):
        row = {"n": n, "epsilon": qcore.modified_q_euler(n, qp)}
        if arg is not None:
            row["epsilon_x"] = qcore.q_euler_polynomial(n, qp, arg)
        table.add(**row)
    return table


def cmd_classical(n_max: int, x: RationalLike | None = None) -> Table:
    columns = ["n", "G"]
    params: dict[str, object] = {"n_max": n_max}
    if x is not None:
        params["x"] = to_fraction(x)
        columns.append("G_x")
    table = Table("classical", params, columns)
    for n, value in enumerate(qlimits.classical_genocchi_table(max(n_max, 1))[: n_max + 1]):
        row = {"n": n, "G": value}
        if x is not None:
            row["G_x"] = qlimits.classical_genocchi_polynomial(n, x)
        table.add(**row)
    return table


def cmd_limit(n_max: int, w: WeightPair, x: int | None = None) -> Table:
    """q -> 1 limits next to the classical values they must equal."""
    params: dict[str, object] = {"n_max": n_max, "alpha": w.alpha, "beta": w.beta}
    if x is not None:
        params["x"] = x
    table = Table("limit", params, ["n", "limit", "classical", "match"])
    for n in range(n_max + 1):
        if x is None:
            report = qlimits.check_classical_limit(n, w)
        else:
            report = qlimits.check_classical_polynomial_limit(n, w, x)
        table.add(n=n, limit=report.lhs, classical=report.rhs, match=report.passed)
    return table


def cmd_zeta(s: complex, x: RationalLike, w: WeightPair, q: RationalLike | float,
             tol: float | None = None, dps: int | None = None) -> Table:
    """xi^(alpha,beta)(s, x | q) as a float with its working precision."""
    params = qanalytic.ZetaParams(s, x, w, q)
    value = complex(qanalytic.qzeta(params, tol=tol, dps=dps))
    defaults = analytic_defaults()
    table = Table(
        "zeta",
        {"s": complex(s), "x": str(x), "alpha": w.alpha, "beta": w.beta, "q": str(q)},
        ["re", "im", "dps", "tol"],
    )
    table.add(re=value.real, im=value.imag, dps=dps or defaults["dps"], tol=tol or defaults["tol"])
    return table


def cmd_witt(p: int, q: RationalLike | None, K: int | None, n: int, N_max: int, w: WeightPair,
             x: int = 0) -> tuple[Table, qpadic.ConvergenceReport]:
    """Valuation of each Riemann sum against the closed form, N = 1..N_max."""
    qp = qpadic.PadicQ(Fraction(p + 1) if q is None else to_fraction(q), p)
    report = qpadic.witt_check(n, w, p, qp, K=K, N_max=N_max, x=x)
    params = dict(report.params)
    params.update(N_max=N_max, delta=report.delta, closed_form=str(report.closed_form), passed=report.passed)
    table = Table("witt", params, ["N", "valuation", "floor", "required"])
    for N, valuation, floor in zip(report.levels, report.valuations, report.floor):
        table.add(N=N, valuation=valuation, floor=floor, required=N - report.delta)
    return table, report


def cmd_audit(**config) -> tuple[Table, AuditResult]:
    """Run the selected suites through :class:`AuditRunner` and tabulate every case."""
    runner = AuditRunner(**config)
    result = runner.run()
    params = {"suites": runner.suites, "orientation": runner.orientation, "n_max": runner.n_max,
              "overrides": runner.overrides}
    params.update(result.counts)
    table = Table("audit", params, ["suite", "seq", "identity", "label", "status", "residual"])
    for case in result.cases:
        table.add(
            suite=case.suite,
            seq=case.seq,
            identity=case.identity,
            label=case.label,
            params=case.params,
            lhs=case.lhs,
            rhs=case.rhs,
            residual=case.residual,
            status=case.status,
        )
    return table, result
