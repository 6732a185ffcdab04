"""Dense univariate polynomials with exact coefficients.

``RationalPolynomial`` carries :class:`fractions.Fraction` coefficients and
supports the exact integration used by the simplex oracles.
``IntegerPolynomial`` carries Python ints (unbounded) and is the carrier for
q-cardinalities.  Both store coefficients in ascending degree and strip
trailing zeros, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _DensePolynomial:
    __slots__ = ("coeffs",)
    _coerce = staticmethod(lambda c: c)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([self._coerce(c) for c in coeffs])

    @classmethod
    def monomial(cls, degree: int, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._coerce(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _DensePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([self._coerce(other)])
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def _lift(self, other):
        if isinstance(other, _DensePolynomial):
            return other
        return type(self)([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return type(self)()
        out = [self._coerce(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``t**k``."""
        return type(self)([0] * k + list(self.coeffs))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"


class RationalPolynomial(_DensePolynomial):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)

    def integral(self) -> "RationalPolynomial":
        """Antiderivative vanishing at 0."""
        return RationalPolynomial(
            [0] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def integrate_gap(self, a: int) -> "RationalPolynomial":
        """Return ``t -> integral_0^t p(s) (t - s)**a ds``.

        Expands ``(t - s)**a`` binomially and integrates term by term.
        """
        out = RationalPolynomial()
        for j in range(a + 1):
            # C(a, j) t^(a-j) (-s)^j
            inner = (self * RationalPolynomial.monomial(j)).integral()
            out = out + inner.shift(a - j) * ((-1) ** j * comb(a, j))
        return out


class IntegerPolynomial(_DensePolynomial):
    """Polynomial in ``q`` with unbounded integer coefficients."""

    __slots__ = ()
    _coerce = staticmethod(int)

    def to_json(self) -> list[str]:
        """Ascending coefficients as decimal strings (explicit zeros kept)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntegerPolynomial":
        return cls(int(c) for c in data)
