"""Exact polynomial arithmetic over the integers and rationals.

Coefficients are stored lowest degree first as Python ints or Fractions, so
every operation here is exact; nothing in this module touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _trimmed(coeffs: Sequence) -> tuple:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial; the zero polynomial has empty coeffs and degree -1."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(_trimmed(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = IntPolynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, k: int) -> IntPolynomial:
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RationalPolynomial:
    """Fraction-coefficient polynomial, same conventions as IntPolynomial."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if coeffs and coeffs[-1] == 0:
            coeffs = _trimmed(coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_int_polynomial(cls, p: IntPolynomial) -> RationalPolynomial:
        return cls(tuple(Fraction(c) for c in p.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(_trimmed(out))

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other: RationalPolynomial | IntPolynomial | int | Fraction) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalPolynomial()
            return RationalPolynomial(tuple(c * other for c in self.coeffs))
        if isinstance(other, IntPolynomial):
            other = RationalPolynomial.from_int_polynomial(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_int_polynomial(self) -> IntPolynomial:
        from .errors import ConsistencyError

        ints = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ConsistencyError(f"coefficient {c} is not an integer")
            ints.append(c.numerator)
        return IntPolynomial(tuple(ints))


@dataclass(frozen=True, slots=True)
class FactoredChromatic:
    """Chromatic polynomial kept as q^a (q-1)^b prod_k [(q-1)^k + (-1)^k (q-1)].

    This form exists exactly when every component of the underlying graph is a
    tree or a simple cycle: a counts tree components (isolated vertices
    included), b counts tree edges, and cycle_lengths lists the cycle sizes.
    Kept factored so a long filtration never pays for dense coefficients.
    """

    q_power: int
    qminus1_power: int
    cycle_lengths: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return self.q_power + self.qminus1_power + sum(self.cycle_lengths)

    def expand(self) -> IntPolynomial:
        q = IntPolynomial((0, 1))
        qm1 = IntPolynomial((-1, 1))
        out = (q ** self.q_power) * (qm1 ** self.qminus1_power)
        for k in self.cycle_lengths:
            out = out * (qm1 ** k + qm1 * ((-1) ** k))
        return out

    def __call__(self, x):
        acc = x ** self.q_power * (x - 1) ** self.qminus1_power
        for k in self.cycle_lengths:
            acc *= (x - 1) ** k + (-1) ** k * (x - 1)
        return acc


def falling_factorial(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1), with the empty product equal to 1."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


def lagrange_interpolate(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Exact interpolation through integer points; degree is len(points) - 1.

    Raises ConsistencyError if the interpolant has a non-integer coefficient,
    which signals corrupted evaluations rather than a user error.
    """
    from .errors import ConsistencyError

    if not points:
        raise ValueError("at least one point required")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")
    acc = RationalPolynomial()
    for i, (xi, yi) in enumerate(points):
        basis = RationalPolynomial((Fraction(1),))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * RationalPolynomial((Fraction(-xj), Fraction(1)))
            denom *= xi - xj
        acc = acc + basis * (Fraction(yi) / denom)
    try:
        return acc.to_int_polynomial()
    except ConsistencyError as exc:
        raise ConsistencyError(f"interpolant is not integral: {exc}") from exc
