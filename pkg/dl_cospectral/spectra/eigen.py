"""Floating-point spectra, used for reporting only."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import NumericalError
from dl_cospectral.spectra.matrices import IntegerSymmetricMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalues of a symmetric matrix in ascending order.

    ``tolerance`` is the absolute gap below which neighbouring eigenvalues
    count as one value with multiplicity.
    """

    eigenvalues: Tuple[float, ...]
    tolerance: float = 1e-6

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __getitem__(self, index: int) -> float:
        return self.eigenvalues[index]

    def descending(self) -> Tuple[float, ...]:
        return tuple(reversed(self.eigenvalues))

    def grouped(self) -> List[Tuple[float, int]]:
        """Distinct values (group means) with their multiplicities."""
        groups: List[List[float]] = []
        for value in self.eigenvalues:
            if groups and value - groups[-1][0] <= self.tolerance:
                groups[-1].append(value)
            else:
                groups.append([value])
        return [(sum(group) / len(group), len(group)) for group in groups]

    def multiplicity(self, value: float) -> int:
        return sum(1 for x in self.eigenvalues if abs(x - value) <= self.tolerance)

    def matches(self, other: "Spectrum", tolerance: float = None) -> bool:
        tolerance = self.tolerance if tolerance is None else tolerance
        return len(self) == len(other) and all(
            abs(a - b) <= tolerance for a, b in zip(self.eigenvalues, other.eigenvalues)
        )

    def to_json(self) -> List[Dict[str, float]]:
        return [{"value": value, "multiplicity": count} for value, count in self.grouped()]

    @classmethod
    def from_multiplicities(
        cls, pairs: Iterable[Tuple[float, int]], tolerance: float = None
    ) -> "Spectrum":
        values = sorted(float(value) for value, count in pairs for _ in range(count))
        if tolerance is None:
            tolerance = settings.DL_MULTIPLICITY_TOLERANCE
        return cls(tuple(values), tolerance)

    def __str__(self) -> str:
        parts = []
        for value, count in self.grouped():
            text = f"{value:.6g}"
            parts.append(text if count == 1 else f"{text}^({count})")
        return "{" + ", ".join(parts) + "}"


def eigenvalues_float(m: IntegerSymmetricMatrix) -> Spectrum:
    """
    Eigenvalues of a symmetric integer matrix with ``numpy.linalg.eigh``.

    Raises:
        NumericalError: If some eigenpair residual ``|m v - lambda v|`` exceeds
            ``DL_EIGEN_TOLERANCE * |m|``
    """
    array = m.as_float_array()
    values, vectors = np.linalg.eigh(array)
    norm = max(np.linalg.norm(array, 2), 1.0)
    residuals = np.linalg.norm(array @ vectors - vectors * values, axis=0)
    worst = float(residuals.max()) if len(residuals) else 0.0
    if worst > settings.DL_EIGEN_TOLERANCE * norm:
        raise NumericalError(
            f"eigenpair residual {worst:.3e} exceeds {settings.DL_EIGEN_TOLERANCE:g} x norm "
            f"for a matrix of order {m.order}",
            residual=worst,
        )
    logger.debug(f"Eigenvalues of a matrix of order {m.order}, worst residual {worst:.3e}")
    return Spectrum(tuple(float(x) for x in values), settings.DL_MULTIPLICITY_TOLERANCE)


def elementary_symmetric(values: Sequence[float], k: int) -> float:
    """Sum of the products of all ``k``-element subsets of ``values``."""
    if k < 0 or k > len(values):
        return 0.0
    table = [1.0] + [0.0] * k
    for x in values:
        for j in range(k, 0, -1):
            table[j] += table[j - 1] * x
    return table[k]
