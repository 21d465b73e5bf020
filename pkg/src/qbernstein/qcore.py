"""q-numbers and the exact combinatorics built on them.

Covers [x]_q on the exact and floating paths, q-factorials, Gaussian
binomials, the generalized q-binomial polynomial in u = [x]_q, forward
differences, and classical Stirling numbers of the second kind.  The
convention 0**0 = 1 is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .kernel import DomainError, binomial_coeff, to_rational
from .upoly import UPoly

__all__ = [
    "QContext",
    "exact_q",
    "forward_differences",
    "forward_differences_binomial",
    "gaussian_binomial",
    "q_factorial",
    "q_number_int",
    "q_number_real",
    "qbinom_upoly",
    "stirling2",
]


@dataclass(frozen=True)
class QContext:
    """Fixes q for one evaluation mode.

    Exact mode carries a rational q, float mode a positive real q != 1.
    Exactly one of the two fields is populated.  Pole exclusions such as
    q = 1, q = -1 or q = 0 depend on the operation and are enforced by the
    operations themselves.
    """

    mode: str
    q_exact: Fraction | None = None
    q_real: float | None = None

    def __post_init__(self):
        if self.mode == "exact":
            if self.q_exact is None or self.q_real is not None:
                raise DomainError("exact context must populate q_exact only")
        elif self.mode == "float":
            if self.q_real is None or self.q_exact is not None:
                raise DomainError("float context must populate q_real only")
            if not self.q_real > 0 or self.q_real == 1:
                raise DomainError("float-mode q must lie in (0, 1) or (1, oo)")
        else:
            raise DomainError(f"unknown context mode: {self.mode!r}")

    @classmethod
    def exact(cls, q) -> "QContext":
        return cls(mode="exact", q_exact=to_rational(q))

    @classmethod
    def real(cls, q: float) -> "QContext":
        return cls(mode="float", q_real=float(q))


def exact_q(ctx) -> Fraction:
    """q from an exact-mode context; bare rationals pass straight through."""
    if isinstance(ctx, QContext):
        if ctx.mode != "exact":
            raise DomainError("an exact-mode q is required here")
        return ctx.q_exact
    return to_rational(ctx)


def q_number_int(x: int, q) -> Fraction:
    """[x]_q = (1 - q**x) / (1 - q) for integer x; [x]_1 = x by the limit.

    Negative x is supported (it appears in the reflection identities) and
    needs q != 0.
    """
    q = exact_q(q)
    if q == 1:
        return Fraction(x)
    if x < 0 and q == 0:
        raise DomainError("negative x requires q != 0")
    return (1 - q**x) / (1 - q)


def q_number_real(x: float, q: float) -> float:
    """[x]_q on the floating path; q must be positive and distinct from 1."""
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    if q == 1:
        raise DomainError("q = 1 is a pole of the floating form; use the limit value x")
    return (1.0 - q**x) / (1.0 - q)


def q_factorial(k: int, q) -> Fraction:
    """[k]_q! as the product of [i]_q for i = 1..k; the empty product is 1.

    Computed by the running recursion [i+1]_q = 1 + q [i]_q, so q = 1 needs
    no special case and yields k!.
    """
    q = exact_q(q)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    out = Fraction(1)
    qi = Fraction(0)  # [i]_q
    for _ in range(k):
        qi = 1 + q * qi
        out *= qi
    return out


def gaussian_binomial(k: int, j: int, q) -> Fraction:
    """[k]_q! / ([j]_q! [k-j]_q!); zero outside 0 <= j <= k.

    Expands to a polynomial in q with nonnegative integer coefficients.  At
    q = -1 the factorial ratio degenerates (even-index q-numbers vanish), so
    that value is rejected for the nontrivial index range.
    """
    q = exact_q(q)
    if j < 0 or j > k:
        return Fraction(0)
    if j == 0 or j == k:
        return Fraction(1)
    if q == -1:
        raise DomainError("q = -1 zeroes the q-factorials in the ratio")
    num = den = Fraction(1)
    for i in range(1, j + 1):
        num *= q_number_int(k - j + i, q)
        den *= q_number_int(i, q)
    return num / den


def qbinom_upoly(k: int, q) -> UPoly:
    """The generalized q-binomial coefficient in x, as a degree-k polynomial
    in u = [x]_q.

    Expands prod_{i=0..k-1} [x-i]_q / [k]_q! through the exact reduction
    [x-i]_q = (u - [i]_q) / q**i.  Needs q != 0 (negative powers of q) and
    q != -1 ([k]_q! vanishes for k >= 2); q = 1 is fine and reproduces the
    classical binomial polynomial.
    """
    q = exact_q(q)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if q == 0:
        raise DomainError("q = 0 is excluded (negative powers of q appear)")
    if q == -1:
        raise DomainError("q = -1 zeroes [k]_q! for k >= 2")
    poly = UPoly.one()
    for i in range(k):
        poly = poly * UPoly((-q_number_int(i, q), 1))
    return poly / (q ** math.comb(k, 2) * q_factorial(k, q))


def forward_differences(samples) -> list[Fraction]:
    """Iterated forward differences: entry k is delta^k f(0) over f(0..n)."""
    vals = [to_rational(s) for s in samples]
    if not vals:
        raise DomainError("samples must be nonempty")
    out = [vals[0]]
    while len(vals) > 1:
        vals = [b - a for a, b in zip(vals, vals[1:])]
        out.append(vals[0])
    return out


def forward_differences_binomial(samples) -> list[Fraction]:
    """The same values via the alternating binomial sum
    delta^k f(0) = sum_j C(k,j) (-1)**(k-j) f(j).

    Kept as an independent route so the iterated computation can be
    cross-checked against it.
    """
    vals = [to_rational(s) for s in samples]
    if not vals:
        raise DomainError("samples must be nonempty")
    n = len(vals) - 1
    return [
        sum((binomial_coeff(k, j) * (-1) ** (k - j) * vals[j] for j in range(k + 1)), Fraction(0))
        for k in range(n + 1)
    ]


def stirling2(m: int, k: int) -> int:
    """Classical Stirling numbers of the second kind via delta^k 0**m / k!.

    Uses 0**0 = 1, so stirling2(0, 0) = 1; zero whenever k > m.
    """
    if m < 0 or k < 0:
        raise DomainError("indices must be nonnegative")
    samples = [t**m for t in range(k + 1)]
    for _ in range(k):
        samples = [b - a for a, b in zip(samples, samples[1:])]
    return samples[0] // math.factorial(k)
