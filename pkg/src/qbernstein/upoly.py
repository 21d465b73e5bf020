"""Dense univariate polynomial arithmetic over exact rationals.

The indeterminate is written ``u`` and stands for the q-number [x]_q.  Since
[1-x]_{1/q} = 1 - [x]_q, the polynomial identities of the q-Bernstein family
become coefficient-wise statements about these objects, valid for every q at
once; checking them here needs no floating point and no choice of sample
points.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .kernel import to_rational

__all__ = ["UPoly", "U"]


class UPoly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of u**i.

    Trailing zero coefficients are trimmed at construction; the zero
    polynomial has an empty coefficient tuple and degree -inf.  Arithmetic
    is exact and scalars (int, Fraction, rational literal) coerce to
    constant polynomials in mixed expressions.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        return len(self._coeffs) - 1 if self._coeffs else -math.inf

    @classmethod
    def zero(cls) -> "UPoly":
        return cls()

    @classmethod
    def one(cls) -> "UPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "UPoly":
        if power < 0:
            raise ValueError("power must be nonnegative")
        c = to_rational(coeff)
        if c == 0:
            return cls()
        return cls((0,) * power + (c,))

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    @staticmethod
    def _as_poly(other) -> "UPoly | None":
        if isinstance(other, UPoly):
            return other
        try:
            return UPoly((to_rational(other),))
        except TypeError:
            return None

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        o = UPoly._as_poly(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other) -> "UPoly":
        o = UPoly._as_poly(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "UPoly":
        o = UPoly._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "UPoly":
        o = UPoly._as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if not self._coeffs or not other._coeffs:
                return UPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return UPoly(out)
        try:
            c = to_rational(other)
        except TypeError:
            return NotImplemented
        return UPoly(tuple(c * a for a in self._coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "UPoly":
        c = to_rational(scalar)
        return UPoly(tuple(a / c for a in self._coeffs))

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = UPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; exact for rational arguments, floating
        for float arguments."""
        if isinstance(value, float):
            acc = 0.0
            for c in reversed(self._coeffs):
                acc = acc * value + float(c)
            return acc
        v = to_rational(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        """The polynomial self(inner(u)), exactly."""
        acc = UPoly.zero()
        for c in reversed(self._coeffs):
            acc = acc * inner + UPoly((c,))
        return acc

    def __repr__(self) -> str:
        return f"UPoly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*u")
            else:
                parts.append(f"{c}*u^{i}")
        return " + ".join(parts)


# The indeterminate itself.
U = UPoly((0, 1))
