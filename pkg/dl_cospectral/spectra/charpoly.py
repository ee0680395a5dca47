"""Exact characteristic polynomials with arbitrary-precision integer coefficients."""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import numpy as np

from dl_cospectral.spectra.matrices import IntegerSymmetricMatrix

Number = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


@dataclass(frozen=True)
class CharPoly:
    """
    Monic integer polynomial ``c0 + c1 x + ... + cn x^n``.

    ``coefficients`` lists ``c0`` first; ``cn`` is always 1.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] != 1:
            raise ValueError(f"polynomial {self.coefficients} is not monic")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def key(self) -> str:
        """Bucket key: the decimal coefficients, ``c0`` first, comma separated."""
        return ",".join(str(c) for c in self.coefficients)

    @classmethod
    def from_key(cls, key: str) -> "CharPoly":
        return cls(tuple(int(part) for part in key.split(",")))

    @classmethod
    def from_integer_roots(cls, roots: Iterable[int]) -> "CharPoly":
        poly = cls((1,))
        for root in roots:
            poly = poly * cls((-root, 1))
        return poly

    @classmethod
    def parse(cls, text: str) -> "CharPoly":
        """
        Parse a polynomial written like ``"x^3 - 6x^2 + 9x"``.

        Superscript exponents (``x³``) and the Unicode minus sign are accepted.
        """
        source = text.replace("−", "-").replace("*", "").replace(" ", "")
        source = re.sub(
            r"x([⁰¹²³⁴⁵⁶⁷⁸⁹]+)", lambda m: "x^" + m.group(1).translate(_SUPERSCRIPTS), source
        )
        terms = [term for term in source.replace("-", "+-").split("+") if term]
        if not terms:
            raise ValueError(f"cannot parse polynomial {text!r}")
        powers = {}
        for term in terms:
            head, has_x, tail = term.partition("x")
            try:
                if not has_x:
                    power, coefficient = 0, int(head)
                else:
                    coefficient = {"": 1, "-": -1}.get(head)
                    if coefficient is None:
                        coefficient = int(head)
                    if not tail:
                        power = 1
                    elif tail.startswith("^"):
                        power = int(tail[1:])
                    else:
                        raise ValueError(tail)
            except ValueError as error:
                raise ValueError(f"cannot parse term {term!r} of {text!r}") from error
            powers[power] = powers.get(power, 0) + coefficient
        degree = max(powers)
        return cls(tuple(powers.get(k, 0) for k in range(degree + 1)))

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        product = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return CharPoly(tuple(product))

    def __pow__(self, exponent: int) -> "CharPoly":
        result = CharPoly((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, x: Number) -> Number:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def divide_by_linear(self, root: int) -> Tuple["CharPoly", int]:
        """
        Synthetic division by ``x - root``.

        Returns:
            Tuple[CharPoly, int]: The monic quotient and the remainder
            ``p(root)``
        """
        if self.degree == 0:
            raise ValueError("cannot divide a constant polynomial by a linear factor")
        quotient = [0] * self.degree
        carry = 0
        for k in range(self.degree, 0, -1):
            carry = self.coefficients[k] + root * carry
            quotient[k - 1] = carry
        remainder = self.coefficients[0] + root * carry
        return CharPoly(tuple(quotient)), remainder

    def root_multiplicity(self, root: int) -> int:
        count = 0
        poly = self
        while poly.degree > 0:
            quotient, remainder = poly.divide_by_linear(root)
            if remainder:
                break
            count += 1
            poly = quotient
        return count

    def __str__(self) -> str:
        parts: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)


def char_poly(m: IntegerSymmetricMatrix) -> CharPoly:
    """
    Exact coefficients of ``det(xI - m)`` by the Faddeev-LeVerrier recurrence.

    With ``M_1 = I`` and ``M_k = m M_(k-1) + c_(n-k+1) I`` the coefficients
    are ``c_(n-k) = -trace(m M_k) / k``. The products run on numpy object
    arrays so entries stay Python integers.

    Raises:
        ArithmeticError: If a division by the step index leaves a remainder,
            which cannot happen for an integer matrix
    """
    n = m.order
    coefficients: List[int] = [0] * (n + 1)
    coefficients[n] = 1
    a = m.as_object_array()
    identity = np.zeros((n, n), dtype=object)
    for i in range(n):
        identity[i, i] = 1

    product = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        current = product + coefficients[n - k + 1] * identity
        product = a.dot(current)
        trace = sum(product[i, i] for i in range(n))
        quotient, remainder = divmod(-int(trace), k)
        if remainder:
            raise ArithmeticError(f"inexact division by {k} in the characteristic polynomial")
        coefficients[n - k] = quotient
    return CharPoly(tuple(coefficients))

