# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""Exception hierarchy for qgenocchi.

Every error carries a short, stable message so the CLI can print it verbatim.
Each class also derives from the closest builtin, so callers that only know
about ``ValueError`` or ``ArithmeticError`` keep working.
"""

from __future__ import annotations


class QGenocchiError(Exception):
    """Base class for all qgenocchi errors."""


class DegenerateQError(QGenocchiError, ValueError):
    """q = 1 (or q <= 0) where an invertible 1 - q is required."""

    def __init__(self, message: str = "degenerate q"):
        super().__init__(message)


class EmptyTailError(QGenocchiError, ValueError):
    def __init__(self, message: str = "empty tail"):
        super().__init__(message)


class ParityViolationError(QGenocchiError, ValueError):
    def __init__(self, message: str = "parity violation"):
        super().__init__(message)


class OrderTooSmallError(QGenocchiError, ValueError):
    def __init__(self, message: str = "order too small"):
        super().__init__(message)


class PrecisionExhaustedError(QGenocchiError, ArithmeticError):
    def __init__(self, message: str = "precision exhausted"):
        super().__init__(message)


class BudgetExceededError(QGenocchiError, RuntimeError):
    def __init__(self, message: str = "budget exceeded"):
        super().__init__(message)


class NotAbelSummableError(QGenocchiError, ArithmeticError):
    def __init__(self, message: str = "not Abel-summable under budget"):
        super().__init__(message)


class InadmissibleQError(QGenocchiError, ValueError):
    """q is not congruent to 1 modulo p."""


class NonFiniteValueError(QGenocchiError, ArithmeticError):
    """NaN or infinity produced by a floating-point evaluation."""
