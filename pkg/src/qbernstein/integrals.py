"""Alternating-measure moments of q-Bernstein basis members and products.

Every value here is an exact rational expressed through q-Euler numbers.
The direct route expands the integrand in powers of u = [x]_q and reads off
E-moments at q; the reflected route rewrites the integrand through 1 - u and
lands on E-values at the reciprocal parameter 1/q.  Equality of the two
routes is a central family of identities the verifier checks.

The reflected forms that circulate in print keep the parameter q instead of
1/q; those variants are false and are retained here (``*_printed``) solely
so the counterexample section can demonstrate the failure.  Note that some
instances coincide numerically under both parameters (for example the
product with k = 1 and degrees (2, 2)), which is why the suites always
include a separating instance such as the single factor k = 1, n = 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernstein import basis_eval_exact
from .euler import euler_number, euler_table
from .kernel import (
    DomainError,
    binomial_coeff,
    is_odd_prime,
    padic_valuation,
    to_rational,
)
from .qcore import q_number_int

__all__ = [
    "IntegralInstance",
    "fermionic_basis_sum",
    "integral_basis",
    "integral_basis_reflected",
    "integral_basis_reflected_printed",
    "integral_power_product",
    "integral_power_product_direct",
    "integral_power_product_printed",
    "integral_product",
    "integral_product_reflected_printed",
]


def _pole_free(q) -> Fraction:
    q = to_rational(q)
    if q == 0 or q == 1 or q == -1:
        raise DomainError(f"q = {q} is excluded (pole of the moment forms)")
    return q


@dataclass(frozen=True)
class IntegralInstance:
    """One power-product moment: prod_i B_{k,n_i}**m_i at a fixed rational q."""

    k: int
    degrees: tuple[tuple[int, int], ...]  # (n_i, m_i) pairs, m_i >= 1
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", to_rational(self.q))
        object.__setattr__(
            self, "degrees", tuple((int(n), int(m)) for n, m in self.degrees)
        )
        if self.k < 0:
            raise DomainError("k must be nonnegative")
        if not self.degrees:
            raise DomainError("at least one factor is required")
        if any(n < 0 or m < 1 for n, m in self.degrees):
            raise DomainError("need n_i >= 0 and m_i >= 1")

    @property
    def total_degree(self) -> int:
        return sum(n * m for n, m in self.degrees)

    @property
    def multiplicity(self) -> int:
        return sum(m for _, m in self.degrees)


def integral_basis(k: int, n: int, q) -> Fraction:
    """Moment of one basis member by direct u-expansion:
    C(n,k) sum_l C(n-k,l) (-1)**l E_{k+l,q}.

    This route uses nothing beyond the definition of the E-moments, so it is
    the ground truth the reflected forms are checked against.  Zero when
    n < k (the basis member itself vanishes).
    """
    q = _pole_free(q)
    if k < 0 or n < 0:
        raise DomainError("indices must be nonnegative")
    c = binomial_coeff(n, k)
    if c == 0:
        return Fraction(0)
    table = euler_table(q, n)
    return c * sum(
        (binomial_coeff(n - k, l) * (-1) ** l * table[k + l] for l in range(n - k + 1)),
        Fraction(0),
    )


def integral_basis_reflected(k: int, n: int, q) -> Fraction:
    """The same moment routed through the substitution u -> 1 - u.

    Lands on E-values at the reciprocal parameter: 2 + E_{n,1/q} for k = 0,
    else C(n,k) sum_j C(k,j) (-1)**(k+j) E_{n-j,1/q}.  Requires n > k so
    every exponent that meets the complement rule stays positive.  Must
    equal ``integral_basis(k, n, q)``.
    """
    q = _pole_free(q)
    if k < 0:
        raise DomainError("k must be nonnegative")
    if n <= k:
        raise DomainError("the reflected route needs n > k")
    return _basis_reflected(k, n, 1 / q)


def integral_basis_reflected_printed(k: int, n: int, q) -> Fraction:
    """Misprinted variant of ``integral_basis_reflected`` (parameter q kept
    in place of 1/q); false in general, e.g. at k = 1, n = 3, q = 1/2 it
    gives -4/3 where the moment is 2/15.  Counterexample use only."""
    q = _pole_free(q)
    if k < 0:
        raise DomainError("k must be nonnegative")
    if n <= k:
        raise DomainError("the reflected route needs n > k")
    return _basis_reflected(k, n, q)


def _basis_reflected(k: int, n: int, qr: Fraction) -> Fraction:
    if k == 0:
        return 2 + euler_number(n, qr)
    table = euler_table(qr, n)
    return binomial_coeff(n, k) * sum(
        (binomial_coeff(k, j) * (-1) ** (k + j) * table[n - j] for j in range(k + 1)),
        Fraction(0),
    )


def integral_product(k: int, ns, q, method: str = "direct") -> Fraction:
    """Moment of prod_i B_{k,n_i} over s factors.

    ``direct``: prod_i C(n_i,k) times sum_j C(N-sk,j) (-1)**j E_{j+sk,q}
    with N = sum(ns); valid for every admissible instance.

    ``reflected``: routes through 1 - u, needs N > s k, and uses the
    reciprocal parameter (2 + E_{N,1/q} for k = 0).  Equality of the two
    methods is the product-moment identity in corrected form.
    """
    q = _pole_free(q)
    degrees = tuple(int(n) for n in ns)
    if not degrees:
        raise DomainError("at least one factor is required")
    if k < 0 or any(n < 0 for n in degrees):
        raise DomainError("indices must be nonnegative")
    s = len(degrees)
    total = sum(degrees)
    if method == "direct":
        coeff = math.prod(binomial_coeff(n, k) for n in degrees)
        if coeff == 0:
            return Fraction(0)
        d = total - s * k  # >= 0 whenever the coefficient is nonzero
        table = euler_table(q, total)
        return coeff * sum(
            (binomial_coeff(d, j) * (-1) ** j * table[j + s * k] for j in range(d + 1)),
            Fraction(0),
        )
    if method == "reflected":
        if total <= s * k:
            raise DomainError("the reflected route needs sum(ns) > s*k")
        return _product_reflected(k, degrees, 1 / q)
    raise DomainError(f"unknown method: {method!r}")


def integral_product_reflected_printed(k: int, ns, q) -> Fraction:
    """Misprinted reflected product form (parameter q instead of 1/q).

    Coincides with the truth on some symmetric instances but separates e.g.
    at k = 1, ns = (1, 2), q = 1/2 (4/45 versus -8/9).  Counterexample use
    only.
    """
    q = _pole_free(q)
    degrees = tuple(int(n) for n in ns)
    if not degrees:
        raise DomainError("at least one factor is required")
    if k < 0 or any(n < 0 for n in degrees):
        raise DomainError("indices must be nonnegative")
    if sum(degrees) <= len(degrees) * k:
        raise DomainError("the reflected route needs sum(ns) > s*k")
    return _product_reflected(k, degrees, q)


def _product_reflected(k: int, degrees: tuple[int, ...], qr: Fraction) -> Fraction:
    s = len(degrees)
    total = sum(degrees)
    if k == 0:
        return 2 + euler_number(total, qr)
    coeff = math.prod(binomial_coeff(n, k) for n in degrees)
    table = euler_table(qr, total)
    sk = s * k
    return coeff * sum(
        (binomial_coeff(sk, j) * (-1) ** (sk - j) * table[total - j] for j in range(sk + 1)),
        Fraction(0),
    )


def integral_power_product(instance: IntegralInstance) -> Fraction:
    """Reflected-route moment of prod_i B_{k,n_i}**m_i.

    With T = sum m_i n_i, M = sum m_i and kM = k*M, evaluates
    prod_i C(n_i,k)**m_i sum_j C(kM,j) (-1)**(kM-j) (2 + E_{T-j,1/q}); the
    additive 2 cancels under the alternating sum whenever kM > 0.  Needs
    T > kM.  Cross-checked against ``integral_power_product_direct``.
    """
    q = _pole_free(instance.q)
    kM = instance.k * instance.multiplicity
    if instance.total_degree <= kM:
        raise DomainError("needs total degree > k * multiplicity")
    return _power_product_reflected(instance, 1 / q)


def integral_power_product_printed(instance: IntegralInstance) -> Fraction:
    """Misprinted variant of ``integral_power_product`` (parameter q in
    place of 1/q); false in general.  Counterexample use only."""
    q = _pole_free(instance.q)
    kM = instance.k * instance.multiplicity
    if instance.total_degree <= kM:
        raise DomainError("needs total degree > k * multiplicity")
    return _power_product_reflected(instance, q)


def _power_product_reflected(instance: IntegralInstance, qr: Fraction) -> Fraction:
    T = instance.total_degree
    kM = instance.k * instance.multiplicity
    coeff = math.prod(binomial_coeff(n, instance.k) ** m for n, m in instance.degrees)
    table = euler_table(qr, T)
    return coeff * sum(
        (
            binomial_coeff(kM, j) * (-1) ** (kM - j) * (2 + table[T - j])
            for j in range(kM + 1)
        ),
        Fraction(0),
    )


def integral_power_product_direct(instance: IntegralInstance) -> Fraction:
    """Direct u-expansion of the power-product moment (oracle route):
    prod_i C(n_i,k)**m_i sum_j C(T-kM,j) (-1)**j E_{j+kM,q}."""
    q = _pole_free(instance.q)
    coeff = math.prod(binomial_coeff(n, instance.k) ** m for n, m in instance.degrees)
    if coeff == 0:
        return Fraction(0)
    T = instance.total_degree
    kM = instance.k * instance.multiplicity
    d = T - kM
    table = euler_table(q, T)
    return coeff * sum(
        (binomial_coeff(d, j) * (-1) ** j * table[j + kM] for j in range(d + 1)),
        Fraction(0),
    )


def fermionic_basis_sum(k: int, n: int, q, p: int, level: int) -> Fraction:
    """Truncated alternating sum of the basis integrand at u = [x]_q.

    Independent p-adic oracle for ``integral_basis``: the valuation of the
    difference must be at least the truncation level in the convergence
    regime |1-q|_p < 1, |q|_p <= 1.
    """
    q = to_rational(q)
    if k < 0 or n < 0:
        raise DomainError("indices must be nonnegative")
    if not is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    if level < 1:
        raise DomainError(f"level must be >= 1, got {level}")
    if padic_valuation(q, p) < 0 or padic_valuation(q - 1, p) < 1:
        raise DomainError("need |q|_p <= 1 and |1-q|_p < 1 for p-adic convergence")
    total = Fraction(0)
    sign = 1
    for x in range(p**level):
        total += sign * basis_eval_exact((k, n), q_number_int(x, q))
        sign = -sign
    return total
