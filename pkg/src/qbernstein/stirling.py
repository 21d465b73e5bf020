"""q-analog Stirling numbers of the second kind and the expansion of the
monomial u**n over the q-binomial-polynomial basis.

Reduce to the classical objects at q = 1.  The expansion identity is
verified coefficient-wise in u (a strictly stronger check than sampling
integer x values), using the same [x-i]_q reduction as ``qbinom_upoly``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .kernel import DomainError, to_rational
from .qcore import gaussian_binomial, q_factorial, q_number_int, qbinom_upoly
from .upoly import UPoly

__all__ = ["q_stirling2", "qstirling_expansion_upoly"]


def q_stirling2(n: int, k: int, q) -> Fraction:
    """q-Stirling number of the second kind:
    q**-C(k,2) / [k]_q! * sum_j (-1)**j q**C(j,2) C_q(k,j) [k-j]_q**n.

    Uses 0**0 = 1 (needed for the n = k = 0 value 1).  q = 0 is excluded by
    the negative power of q, q = -1 by the vanishing q-factorials; q = 1 is
    fine and gives the classical numbers.
    """
    q = to_rational(q)
    if n < 0 or k < 0:
        raise DomainError("indices must be nonnegative")
    if q == 0:
        raise DomainError("q = 0 is excluded (negative powers of q)")
    if q == -1:
        raise DomainError("q = -1 zeroes [k]_q! for k >= 2")
    total = Fraction(0)
    for j in range(k + 1):
        total += (
            (-1) ** j
            * q ** math.comb(j, 2)
            * gaussian_binomial(k, j, q)
            * q_number_int(k - j, q) ** n
        )
    return q ** (-math.comb(k, 2)) * total / q_factorial(k, q)


def qstirling_expansion_upoly(n: int, q) -> UPoly:
    """Reassemble u**n from the q-binomial-polynomial basis:
    sum_k q**C(k,2) [k]_q! s_q(n,k) * qbinom_upoly(k).

    The contract is that the result equals the monomial u**n exactly; the
    verifier asserts that equality coefficient-wise.
    """
    q = to_rational(q)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if q == 0 or q == -1:
        raise DomainError("q = 0 and q = -1 are excluded")
    acc = UPoly.zero()
    for k in range(n + 1):
        scale = q ** math.comb(k, 2) * q_factorial(k, q) * q_stirling2(n, k, q)
        if scale != 0:
            acc = acc + scale * qbinom_upoly(k, q)
    return acc
