"""Sign, log-concavity and unimodality of characteristic polynomial coefficients."""

import csv
import io
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from dl_cospectral.core.exceptions import NotATreeError
from dl_cospectral.graphs.distances import is_connected
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.spectra.charpoly import CharPoly
from dl_cospectral.spectra.cospectral import d_char_poly


@dataclass(frozen=True)
class CoefficientReport:
    """
    Shape of the coefficient sequence ``c1..cn`` of a characteristic polynomial.

    Attributes:
        alternating_signs: Every nonzero ``ck`` has the sign of ``(-1)^(n-k)``
        log_concave: ``ck^2 >= c(k-1) c(k+1)`` for ``1 < k < n``
        unimodal_abs: ``|ck|`` rises weakly, then falls weakly
        decreasing_abs: ``|c1| >= |c2| >= ... >= |cn|``
        peak_index: Smallest ``k`` where ``|ck|`` is largest
    """

    alternating_signs: bool
    log_concave: bool
    unimodal_abs: bool
    decreasing_abs: bool
    peak_index: int

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def is_unimodal(values: Sequence) -> bool:
    k = 1
    while k < len(values) and values[k] >= values[k - 1]:
        k += 1
    while k < len(values) and values[k] <= values[k - 1]:
        k += 1
    return k >= len(values)


def peak_index(values: Sequence, start: int = 0) -> int:
    """Smallest index (offset by ``start``) of the largest value."""
    best = max(values)
    return start + list(values).index(best)


def coefficient_report(p: CharPoly) -> CoefficientReport:
    n = p.degree
    if n < 1:
        raise ValueError("coefficient analysis needs a polynomial of degree at least 1")
    c = p.coefficients
    magnitudes = [abs(c[k]) for k in range(1, n + 1)]
    return CoefficientReport(
        alternating_signs=all(
            (c[k] > 0) == ((n - k) % 2 == 0) for k in range(n + 1) if c[k] != 0
        ),
        log_concave=all(c[k] * c[k] >= c[k - 1] * c[k + 1] for k in range(2, n)),
        unimodal_abs=is_unimodal(magnitudes),
        decreasing_abs=all(a >= b for a, b in zip(magnitudes, magnitudes[1:])),
        peak_index=peak_index(magnitudes, start=1),
    )


def coefficients_csv(p: CharPoly) -> str:
    """Coefficient sequence as CSV with columns ``k,coefficient,abs``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "coefficient", "abs"])
    for k, value in enumerate(p.coefficients):
        writer.writerow([k, value, abs(value)])
    return buffer.getvalue()


def normalized_tree_coefficients(t: Graph) -> Tuple[Fraction, ...]:
    """
    Normalized coefficients of the distance characteristic polynomial of a tree.

    With ``det(D - xI) = sum(delta_k x^k)`` the normalized coefficient is
    ``d_k = (-1)^(n-1) delta_k / 2^(n-k-2)`` for ``k = 0..n-2``.

    Raises:
        NotATreeError: If ``t`` is disconnected or has other than ``n - 1`` edges
    """
    n = t.order
    if n < 2 or t.edge_count != n - 1 or not is_connected(t):
        raise NotATreeError(f"graph with {n} vertices and {t.edge_count} edges is not a tree")
    p = d_char_poly(t)
    sign = -1 if n % 2 else 1
    result = []
    for k in range(n - 1):
        delta = sign * p[k]
        value = Fraction(delta, 2 ** (n - k - 2))
        result.append(value if (n - 1) % 2 == 0 else -value)
    return tuple(result)
