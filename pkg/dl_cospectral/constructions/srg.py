"""Strongly regular graph parameters and their distance Laplacian spectra."""

from dataclasses import dataclass
from math import isqrt, sqrt
from typing import Optional, Tuple

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.spectra.charpoly import CharPoly
from dl_cospectral.spectra.eigen import Spectrum


@dataclass(frozen=True)
class SrgParameters:
    """
    Parameters ``(n, k, lam, mu)`` of a connected, non-complete strongly regular graph.

    Such a graph has diameter two, so its distance Laplacian is
    ``(2n - k) I + A - 2J`` and its transmission is ``2n - k - 2``.
    """

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        n, k, lam, mu = self.n, self.k, self.lam, self.mu
        if not (0 < k < n - 1 and 0 <= lam < k and 1 <= mu <= k):
            raise ParameterError(f"({n}, {k}, {lam}, {mu}) are not connected non-complete SRG parameters")
        if k * (k - lam - 1) != (n - k - 1) * mu:
            raise ParameterError(
                f"({n}, {k}, {lam}, {mu}) violate k(k - lam - 1) = (n - k - 1) mu"
            )
        self.multiplicities()

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.n, self.k, self.lam, self.mu

    @property
    def discriminant(self) -> int:
        return (self.lam - self.mu) ** 2 + 4 * (self.k - self.mu)

    @property
    def transmission(self) -> int:
        return 2 * self.n - self.k - 2

    def multiplicities(self) -> Tuple[int, int]:
        """
        Multiplicities of the larger and the smaller nontrivial eigenvalue.

        Raises:
            ParameterError: If they are not nonnegative integers
        """
        n, k = self.n, self.k
        delta = self.discriminant
        numerator = 2 * k + (n - 1) * (self.lam - self.mu)
        root = isqrt(delta)
        if root * root == delta:
            twice_plus, remainder = divmod((n - 1) * root - numerator, root)
            if remainder or twice_plus % 2:
                raise ParameterError(f"{self.as_tuple()} give non-integral multiplicities")
            plus = twice_plus // 2
        else:
            if numerator != 0 or (n - 1) % 2:
                raise ParameterError(f"{self.as_tuple()} give irrational multiplicities")
            plus = (n - 1) // 2
        minus = n - 1 - plus
        if plus < 0 or minus < 0:
            raise ParameterError(f"{self.as_tuple()} give negative multiplicities")
        return plus, minus


def srg_dl_char_poly(p: SrgParameters) -> CharPoly:
    """
    Exact distance Laplacian polynomial ``x (x - r1)^f (x - r2)^g``.

    With an irrational discriminant the two roots are conjugate and the
    polynomial is ``x (x^2 - b x + c)^f`` with integer ``b`` and ``c``.
    """
    plus, minus = p.multiplicities()
    delta = p.discriminant
    twice_base = 2 * (2 * p.n - p.k) + p.lam - p.mu
    root = isqrt(delta)
    x = CharPoly((0, 1))
    if root * root == delta:
        high = (twice_base + root) // 2
        low = (twice_base - root) // 2
        return x * CharPoly((-high, 1)) ** plus * CharPoly((-low, 1)) ** minus
    constant, remainder = divmod(twice_base * twice_base - delta, 4)
    if remainder:
        raise ParameterError(f"{p.as_tuple()} give a non-integral polynomial")
    return x * CharPoly((constant, -twice_base, 1)) ** plus


def srg_dl_spectrum(p: SrgParameters) -> Spectrum:
    """``0`` once and ``2n - k + (lam - mu ± sqrt(disc)) / 2`` with their multiplicities."""
    plus, minus = p.multiplicities()
    base = 2 * p.n - p.k + (p.lam - p.mu) / 2
    half_root = sqrt(p.discriminant) / 2
    return Spectrum.from_multiplicities(
        [(0.0, 1), (base + half_root, plus), (base - half_root, minus)],
        settings.DL_MULTIPLICITY_TOLERANCE,
    )


def srg_parameters(g: Graph) -> Optional[SrgParameters]:
    """Parameters of ``g`` when it is a connected non-complete strongly regular graph."""
    degrees = set(g.degrees())
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    rows = g.rows
    lams, mus = set(), set()
    for u in g.vertices():
        for v in range(u + 1, g.order):
            common = (rows[u] & rows[v]).bit_count()
            (lams if rows[u] >> v & 1 else mus).add(common)
    if len(lams) > 1 or len(mus) != 1:
        return None
    try:
        return SrgParameters(g.order, k, lams.pop() if lams else 0, mus.pop())
    except ParameterError:
        return None
