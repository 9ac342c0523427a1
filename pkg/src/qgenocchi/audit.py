"""
Audit suites: grids of identity checks and their classification
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

from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, NamedTuple

from . import qanalytic, qcore, qlimits, qpadic
from .config import inclusive, suite_defaults
from .qcore import EulerForm, IdentityReport, Orientation, PolyArgument, QPoint, WeightPair


class AuditStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERRATUM_EXPECTED = "erratum-expected"


SUITES = ("boundary", "tail", "mult", "witt", "lemma1", "limit", "interp", "euler", "abel", "hurwitz", "beta")


class AuditTask(NamedTuple):
    """One case to run; plain data so it can cross a process boundary."""

    suite: str
    seq: int
    kind: str
    args: dict[str, Any]


@dataclass(frozen=True)
class AuditCase:
    suite: str
    seq: int
    identity: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    residual: Any
    status: AuditStatus
    duration_ms: float = 0.0
    notes: tuple[str, ...] = field(default=())

    @property
    def key(self) -> tuple[int, int]:
        return (SUITES.index(self.suite), self.seq)

    @property
    def label(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params.items())


@dataclass
class AuditResult:
    suites: list[str]
    cases: list[AuditCase]

    @property
    def counts(self) -> dict[str, int]:
        counts = {status.value: 0 for status in AuditStatus}
        for case in self.cases:
            counts[case.status.value] += 1
        return counts

    @property
    def exit_code(self) -> int:
        return 1 if any(case.status is AuditStatus.FAIL for case in self.cases) else 0


def _weights(grid: dict[str, Any]) -> Iterator[WeightPair]:
    for alpha in inclusive(grid["alpha"]):
        for beta in inclusive(grid["beta"]):
            yield WeightPair(alpha, beta)


def _n_range(bounds: list[int], n_max: int | None) -> range:
    lo, hi = bounds
    return range(lo, (hi if n_max is None else min(hi, n_max)) + 1)


def _lemma1_integrands() -> list[qpadic.IntegrandSpec]:
    spec = qpadic.IntegrandSpec
    return [
        spec.constant(1),
        spec.monomial(0, 1, 1),
        spec.monomial(1, 2, 2) + spec.monomial(0, 1, 0, coeff=Fraction(-1, 2)),
    ]


GRID_OVERRIDES = ("q", "alpha", "beta", "p", "level", "precision", "tol")


def merge_overrides(grid: dict[str, Any], overrides: dict[str, Any] | None) -> dict[str, Any]:
    """Replace the grid entries named on the command line.

    A value only reaches suites whose grid has the matching entry: ``q`` and
    ``tol`` where the grid lists them, a weight as the single pair ``[w, w]``,
    and ``p``, ``level`` or ``precision`` in the p-adic suites.
    """
    if not overrides:
        return grid
    q = overrides.get("q")
    if q is not None and "q" in grid:
        grid["q"] = [str(q)] if isinstance(grid["q"], list) else str(q)
    for weight in ("alpha", "beta"):
        value = overrides.get(weight)
        if value is not None and weight in grid:
            grid[weight] = [value, value]
    if "levels" in grid:
        p, level = overrides.get("p"), overrides.get("level")
        if p is not None:
            grid["levels"] = {str(p): level or grid["levels"].get(str(p), 3)}
        elif level is not None:
            grid["levels"] = {key: level for key in grid["levels"]}
        if overrides.get("precision") is not None:
            grid["precision"] = overrides["precision"]
    tol = overrides.get("tol")
    if tol is not None and "tol" in grid:
        grid["tol"] = tol
    return grid


def build_tasks(suite: str, n_max: int | None = None, orientation: Orientation | None = None,
                overrides: dict[str, Any] | None = None) -> list[AuditTask]:
    """The grid of a suite with command-line overrides, optionally capped at n <= n_max."""
    if suite not in SUITES:
        raise ValueError(f"Unknown suite: {suite}")
    base = suite_defaults(suite)
    grid = merge_overrides(suite_defaults(suite), overrides)
    raw: list[tuple[str, dict[str, Any]]] = []

    if suite == "boundary":
        for w in _weights(grid):
            for q in grid["q"]:
                raw.extend(("boundary", {"n": n, "w": w, "q": q}) for n in _n_range(grid["n"], n_max))
    elif suite == "tail":
        orientations = [orientation] if orientation else list(Orientation)
        for w in _weights(grid):
            for q in grid["q"]:
                for m in _n_range(grid["m"], n_max):
                    for n in inclusive(grid["n"]):
                        raw.extend(("tail", {"m": m, "n": n, "w": w, "q": q, "orientation": o})
                                   for o in orientations)
    elif suite == "mult":
        for w in _weights(grid):
            for q in grid["q"]:
                for d in grid["d"]:
                    for n in _n_range(grid["n"], n_max):
                        raw.extend(("mult", {"n": n, "d": d, "w": w, "q": q, "x": k})
                                   for k in grid["y_powers"])
    elif suite == "limit":
        for w in _weights(grid):
            raw.extend(("limit", {"n": n, "w": w}) for n in _n_range(grid["n"], n_max))
    elif suite == "witt":
        for p_text, level in grid["levels"].items():
            p = int(p_text)
            for w in _weights(grid):
                raw.extend(("witt", {"n": n, "w": w, "p": p, "level": level, "K": grid.get("precision")})
                           for n in _n_range(grid["n"], n_max))
    elif suite == "lemma1":
        for p_text, level in grid["levels"].items():
            for beta in inclusive(grid["beta"]):
                for f in _lemma1_integrands():
                    raw.extend(("lemma1", {"f": f, "n": n, "p": int(p_text), "beta": beta, "level": level,
                                           "K": grid.get("precision")})
                               for n in _n_range(grid["n"], n_max))
    elif suite == "interp":
        for w in _weights(grid):
            for x in grid["x"]:
                raw.extend(("interp", {"n": n, "x": x, "w": w, "q": grid["q"], "tol": grid["tol"]})
                           for n in _n_range(grid["n"], n_max))
    elif suite == "euler":
        for q in grid["q"]:
            for n in _n_range(grid["n"], n_max):
                raw.append(("euler_boundary", {"n": n, "q": q}))
                raw.extend(("euler_recurrence", {"k": n, "q": q, "form": form}) for form in EulerForm)
    elif suite == "abel":
        for w in _weights(grid):
            raw.extend(("series_number", {"n": n, "w": w, "q": grid["q"], "tol": grid["tol"]})
                       for n in _n_range(grid["n"], n_max))
        for x in grid["x"]:
            raw.append(("generating", {"t": grid["t"], "x": x, "w": WeightPair(1, 1), "q": grid["q"],
                                       "n_terms": grid["n_terms"], "tol": grid["generating_tol"]}))
    elif suite == "hurwitz":
        raw.extend(("hurwitz", {"s": s, "x": x, "tol": grid["tol"]}) for s, x in grid["cases"])
    elif suite == "beta":
        for w in _weights(grid):
            for q in grid["q"]:
                for beta2 in inclusive(base["beta"]):
                    if beta2 > w.beta:
                        raw.extend(("beta", {"n": n, "w": w, "beta2": beta2, "q": q})
                                   for n in _n_range(grid["n"], n_max))

    return [AuditTask(suite, seq, kind, args) for seq, (kind, args) in enumerate(raw)]


def _status(report: IdentityReport) -> AuditStatus:
    return AuditStatus.PASS if report.passed else AuditStatus.FAIL


def _tail_status(report: IdentityReport, n: int, orientation: Orientation) -> AuditStatus:
    if report.passed:
        return AuditStatus.PASS
    # the printed ordering differs from the proof exactly for even n
    if orientation is Orientation.AS_PRINTED and n % 2 == 0:
        return AuditStatus.ERRATUM_EXPECTED
    return AuditStatus.FAIL


def _euler_status(report: IdentityReport, form: EulerForm) -> AuditStatus:
    if report.passed:
        return AuditStatus.PASS
    return AuditStatus.ERRATUM_EXPECTED if form is EulerForm.AS_PRINTED else AuditStatus.FAIL


def _run_boundary(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qcore.check_boundary(a["n"], a["w"], QPoint.of(a["q"]))
    return report, _status(report)


def _run_tail(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    orientation = Orientation(a["orientation"])
    report = qcore.check_tail(a["m"], a["n"], a["w"], QPoint.of(a["q"]), orientation)
    return report, _tail_status(report, a["n"], orientation)


def _run_mult(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    q = QPoint.of(a["q"])
    report = qcore.check_multiplication(a["n"], a["d"], a["w"], q, PolyArgument.at(a["x"], q))
    return report, _status(report)


def _run_limit(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qlimits.check_classical_limit(a["n"], a["w"])
    return report, _status(report)


def _run_witt(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    p = a["p"]
    conv = qpadic.witt_check(a["n"], a["w"], p, qpadic.PadicQ(Fraction(1 + p), p), K=a["K"],
                             N_max=a["level"])
    report = IdentityReport("witt", conv.params, str(conv.closed_form), list(conv.valuations),
                            list(conv.valuations), conv.passed, valuation=min(conv.valuations),
                            notes=conv.notes)
    return report, _status(report)


def _run_lemma1(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    p = a["p"]
    report = qpadic.lemma1_check(a["f"], a["n"], p, qpadic.PadicQ(Fraction(1 + p), p), a["beta"],
                                 a["level"], K=a["K"])
    return report, _status(report)


def _run_interp(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qanalytic.interpolation_check(a["n"], a["x"], a["w"], QPoint.of(a["q"]), a["tol"])
    return report, _status(report)


def _run_euler_boundary(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qcore.check_euler_boundary(a["n"], QPoint.of(a["q"]))
    return report, _status(report)


def _run_euler_recurrence(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    form = EulerForm(a["form"])
    report = qcore.check_euler_recurrence(a["k"], QPoint.of(a["q"]), form)
    return report, _euler_status(report, form)


def _run_series_number(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qanalytic.series_number_check(a["n"], a["w"], QPoint.of(a["q"]), a["tol"])
    return report, _status(report)


def _run_generating(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    q = QPoint.of(a["q"])
    report = qanalytic.generating_check(a["t"], PolyArgument.at(a["x"], q), a["w"], q, a["n_terms"], a["tol"])
    return report, _status(report)


def _run_hurwitz(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qanalytic.hurwitz_limit_check(a["s"], a["x"], tol=a["tol"])
    return report, _status(report)


def _run_beta(a: dict[str, Any]) -> tuple[IdentityReport, AuditStatus]:
    report = qcore.check_beta_symmetry(a["n"], a["w"], a["beta2"], QPoint.of(a["q"]))
    return report, _status(report)


_RUNNERS: dict[str, Callable[[dict[str, Any]], tuple[IdentityReport, AuditStatus]]] = {
    "boundary": _run_boundary,
    "tail": _run_tail,
    "mult": _run_mult,
    "limit": _run_limit,
    "witt": _run_witt,
    "lemma1": _run_lemma1,
    "interp": _run_interp,
    "euler_boundary": _run_euler_boundary,
    "euler_recurrence": _run_euler_recurrence,
    "series_number": _run_series_number,
    "generating": _run_generating,
    "hurwitz": _run_hurwitz,
    "beta": _run_beta,
}


def run_task(task: AuditTask) -> AuditCase:
    """Run one case. Module-level so worker processes can pickle it."""
    start = time.perf_counter()
    report, status = _RUNNERS[task.kind](task.args)
    duration_ms = (time.perf_counter() - start) * 1000.0
    return AuditCase(
        suite=task.suite,
        seq=task.seq,
        identity=report.identity,
        params=dict(report.params),
        lhs=report.lhs,
        rhs=report.rhs,
        residual=report.residual,
        status=status,
        duration_ms=duration_ms,
        notes=report.notes,
    )


Finding = dict[str, Any]


def detect_findings(cases: list[AuditCase]) -> tuple[list[Finding], list[str]]:
    """Summarise what the statuses say about the printed identities."""
    findings: list[Finding] = []
    recommendations: list[str] = []

    failed = [c for c in cases if c.status is AuditStatus.FAIL]
    if failed:
        by_identity: dict[str, int] = {}
        for case in failed:
            by_identity[case.identity] = by_identity.get(case.identity, 0) + 1
        worst = ", ".join(f"{name} ({count})" for name, count in sorted(by_identity.items()))
        findings.append({
            "type": "identity_failures",
            "severity": "critical",
            "metric": f"{len(failed)} failing cases: {worst}",
            "impact": "An identity the implementation asserts does not hold on the default grid",
        })
        recommendations.append("Re-run the failing suite with --format json to inspect residuals case by case")

    tail_errata = [c for c in cases if c.identity == "tail" and c.status is AuditStatus.ERRATUM_EXPECTED]
    if tail_errata:
        findings.append({
            "type": "tail_ordering_erratum",
            "severity": "medium",
            "metric": f"{len(tail_errata)} even-n cases disagree in the printed ordering",
            "impact": "The printed left-hand side swaps g(n) and g; only the lemma ordering holds for even n",
        })
        recommendations.append("Use --orientation lemma when relying on the tail identity")

    euler_errata = [c for c in cases if c.identity == "euler_recurrence" and c.status is AuditStatus.ERRATUM_EXPECTED]
    if euler_errata:
        findings.append({
            "type": "euler_sign_erratum",
            "severity": "medium",
            "metric": f"{len(euler_errata)} q-Euler recurrence cases fail with the printed minus sign",
            "impact": "(q eps + 1)^k + eps_k = [2]_q [k = 0] holds; the printed form does not",
        })

    return findings, recommendations
