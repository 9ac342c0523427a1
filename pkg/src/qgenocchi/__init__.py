"""
qgenocchi - Exact modified q-Genocchi numbers and polynomials with weight
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

All exact work is done in Fraction; floats appear only in the analytic
(q-zeta, Abel) layer, which runs on mpmath.

Example usage:
    # CLI
    $ qgenocchi numbers --n-max 6 --q 1/2 --alpha 2
    $ qgenocchi audit --suite boundary

    # Programmatic
    from qgenocchi import QPoint, WeightPair, genocchi_number

    genocchi_number(2, WeightPair(1, 1), QPoint.of("1/2"))   # Fraction(-1, 1)
"""

__version__ = "0.1.0"
__license__ = "LGPL-2.1-only"

from .errors import QGenocchiError
from .qcore import (
    IdentityReport,
    PolyArgument,
    QPoint,
    WeightPair,
    genocchi_number,
    genocchi_polynomial,
    modified_q_euler,
)
from .runner import AuditRunner

__all__ = [
    "AuditRunner",
    "IdentityReport",
    "PolyArgument",
    "QGenocchiError",
    "QPoint",
    "WeightPair",
    "genocchi_number",
    "genocchi_polynomial",
    "modified_q_euler",
    "__version__",
]
