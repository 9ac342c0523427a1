# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""Default grids and budgets, read from the bundled ``defaults.json``."""

from __future__ import annotations

import copy
import json
import os
from functools import lru_cache
from importlib import resources
from typing import Any

BUDGET_ENV = "QGEN_BUDGET"


@lru_cache(maxsize=1)
def _load() -> dict[str, Any]:
    text = resources.files("qgenocchi").joinpath("defaults.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_defaults() -> dict[str, Any]:
    """A fresh copy of the defaults; callers may mutate it freely."""
    return copy.deepcopy(_load())


def suite_defaults(name: str) -> dict[str, Any]:
    suites = _load()["suites"]
    if name not in suites:
        raise KeyError(f"Unknown suite: {name}")
    return copy.deepcopy(suites[name])


def inclusive(bounds: list[int]) -> range:
    """``[lo, hi]`` from the defaults file as a range."""
    lo, hi = bounds
    return range(lo, hi + 1)


def term_budget(override: int | None = None) -> int:
    """Cap on p^N, from the argument, then $QGEN_BUDGET, then the defaults file."""
    if override is not None:
        return _positive(override, "budget")
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None
        return _positive(value, BUDGET_ENV)
    return int(_load()["budget"]["terms"])


def abel_term_budget() -> int:
    return int(_load()["budget"]["abel_terms"])


def zeta_term_budget() -> int:
    return int(_load()["budget"]["zeta_terms"])


def padic_defaults() -> dict[str, int]:
    return dict(_load()["padic"])


def analytic_defaults() -> dict[str, Any]:
    return dict(_load()["analytic"])


def _positive(value: int, name: str) -> int:
    if value <= 0:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return value
