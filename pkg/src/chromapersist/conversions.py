"""Conversions between the chromatic, Poincare, diagonal-E, and Betti views.

The complement's Poincare polynomial is P(t) = (-t)^n chi(-1/t), so chi
coefficient c_i lands on t^(n-i) with sign (-1)^(n-i) and every output
coefficient must come out nonnegative. The two-variable E-polynomial is
chi(uv), which this package only ever needs on the diagonal s = uv.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .polynomials import FactoredChromatic, IntPolynomial


def chromatic_to_poincare(chi: IntPolynomial, n: int) -> IntPolynomial:
    if chi.degree != n:
        raise ValueError(f"chromatic polynomial has degree {chi.degree}, expected {n}")
    out = [0] * (n + 1)
    for i, c in enumerate(chi.coeffs):
        out[n - i] = (-1) ** (n - i) * c
    poly = IntPolynomial(tuple(out))
    if any(c < 0 for c in poly.coeffs):
        raise ConsistencyError(f"negative Poincare coefficients from {chi.coeffs}")
    return poly


def poincare_to_chromatic(poincare: IntPolynomial, n: int) -> IntPolynomial:
    if poincare.degree > n:
        raise ValueError(f"Poincare polynomial has degree {poincare.degree} > n = {n}")
    padded = list(poincare.coeffs) + [0] * (n + 1 - len(poincare.coeffs))
    out = [0] * (n + 1)
    for j, c in enumerate(padded):
        out[n - j] = (-1) ** j * c
    return IntPolynomial(tuple(out))


class DiagonalEPolynomial:
    """E-polynomial on the diagonal s = uv, i.e. the chromatic polynomial in s.

    Holds either a dense polynomial or a factored closed form; the factored
    form expands lazily exactly once, so long filtrations can carry thousands
    of these without dense coefficient work. Equality compares values.
    """

    __slots__ = ("_dense", "_factored")

    def __init__(
        self,
        dense: IntPolynomial | None = None,
        factored: FactoredChromatic | None = None,
    ):
        if (dense is None) == (factored is None):
            raise ValueError("provide exactly one of dense, factored")
        self._dense = dense
        self._factored = factored

    @classmethod
    def from_dense(cls, poly: IntPolynomial) -> DiagonalEPolynomial:
        return cls(dense=poly)

    @classmethod
    def from_factored(cls, form: FactoredChromatic) -> DiagonalEPolynomial:
        return cls(factored=form)

    @property
    def is_expanded(self) -> bool:
        return self._dense is not None

    @property
    def factored_form(self) -> FactoredChromatic | None:
        return self._factored

    @property
    def poly(self) -> IntPolynomial:
        if self._dense is None:
            self._dense = self._factored.expand()
        return self._dense

    @property
    def degree(self) -> int:
        if self._dense is not None:
            return self._dense.degree
        return self._factored.degree

    def __call__(self, x):
        if self._dense is not None:
            return self._dense(x)
        return self._factored(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagonalEPolynomial):
            return NotImplemented
        return self.poly == other.poly

    def __repr__(self) -> str:
        if self._dense is not None:
            return f"DiagonalEPolynomial(dense={self._dense.coeffs})"
        return f"DiagonalEPolynomial(factored={self._factored})"


def chromatic_to_diagonal_e(chi: IntPolynomial) -> DiagonalEPolynomial:
    return DiagonalEPolynomial.from_dense(chi)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers b_0..b_n of the arrangement complement."""

    values: tuple[int, ...]


def betti_vector(poincare: IntPolynomial, n: int) -> BettiVector:
    if poincare.degree > n:
        raise ValueError(f"Poincare polynomial has degree {poincare.degree} > n = {n}")
    if any(c < 0 for c in poincare.coeffs):
        raise ConsistencyError("Betti numbers cannot be negative")
    padded = tuple(poincare.coeffs) + (0,) * (n + 1 - len(poincare.coeffs))
    return BettiVector(padded)
