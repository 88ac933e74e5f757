"""Generating series behind symmetric m-ary pseudo-spline symbols.

Everything here is exact.  The central object is the power series

    G_{m,n}(y) = (m / U_{m-1}(sqrt(1 - y)))**(n + 1),

whose degree-l' Taylor polynomial, evaluated at delta(z) = -(1-z)^2/(4z),
produces the derived symbol of the pseudo-spline of type (n, 2l'+1).  Writing
m = 2m' + eps with eps in {0, 1}, the Chebyshev polynomial of the second kind
satisfies the closed form

    U_{m-1}(sqrt(1 - y)) = m * sqrt(1 - y)**(1 - eps) * S_m(y),

with S_m a polynomial of degree m' + eps - 1 whose coefficients come from the
explicit products computed in :func:`chebyshev_sqrt_series`.  G_{m,n} is then
assembled from P_m = 1 - S_m via a geometric series and a binomial series for
the leftover square-root factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .laurent import LaurentPoly, Q, UniPoly

#: delta(z) = -(1 - z)^2 / (4z), the squared-sine variable on the unit circle.
DELTA = LaurentPoly((Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 4)), offset=-1)

VARIANTS = ("primal", "dual_conjecture")


def chebyshev_u(degree: int) -> UniPoly:
    """Chebyshev polynomial of the second kind, by the three-term recursion."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    prev = UniPoly.one()
    if degree == 0:
        return prev
    curr = UniPoly((0, 2))
    for _ in range(degree - 1):
        prev, curr = curr, UniPoly((0, 2)) * curr - prev
    return curr

def split_arity(m: int) -> tuple[int, int]:
    """Write m = 2m' + eps with eps in {0, 1}; returns (m', eps)."""
    if m < 2:
        raise ValueError("arity must be at least 2")
    return m // 2, m % 2


def chebyshev_sqrt_series(m: int) -> UniPoly:
    """The polynomial S_m with U_{m-1}(sqrt(1-y)) = m*sqrt(1-y)^(1-eps)*S_m(y).

    Coefficient of y^k is prod_{j=1..k}((2j - eps)^2 - m^2) / (2k+1)!, for
    k = 0 .. m' + eps - 1.  S_m(0) = 1.
    """
    mprime, eps = split_arity(m)
    coeffs = []
    prod = 1
    for k in range(mprime + eps):
        if k > 0:
            prod *= (2 * k - eps) ** 2 - m * m
        coeffs.append(Fraction(prod, factorial(2 * k + 1)))
    return UniPoly(coeffs)


def p_poly(m: int) -> UniPoly:
    """P_m = 1 - S_m; vanishes at 0, degree m' + eps - 1."""
    return UniPoly.one() - chebyshev_sqrt_series(m)


def general_binomial(alpha: Fraction, k: int) -> Fraction:
    """Binomial coefficient C(alpha, k) for rational (possibly half-integer) alpha."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= alpha - i
    return num / factorial(k)


def binomial_series(alpha: Fraction, order: int) -> UniPoly:
    """Taylor polynomial of (1 - y)**alpha up to (excluding) y**order."""
    return UniPoly([general_binomial(alpha, k) * (-1) ** k for k in range(order)])


@dataclass(frozen=True)
class GenFunExpansion:
    """Truncated Taylor expansion of the generating series.

    ``g`` holds the coefficients g_0 .. g_{l'}; ``variant`` records whether
    the extra 1/sqrt(1 - y) factor of the dual construction was applied.
    """

    m: int
    mprime: int
    epsilon: int
    n: int
    lprime: int
    variant: str
    g: tuple[Fraction, ...]
    p: UniPoly

    def as_poly(self) -> UniPoly:
        return UniPoly(self.g)


def taylor_g(m: int, n: int, lprime: int, variant: str = "primal") -> GenFunExpansion:
    """Taylor coefficients of G_{m,n} (or G_{m,n}/sqrt(1-y)) through degree l'.

    The geometric part sum_k C(n+k, k) P_m(y)^k terminates modulo y^{l'+1}
    because P_m has no constant term; the square-root prefactor contributes a
    binomial series with half-integer exponent.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown expansion variant: {variant!r}")
    if n < 0:
        raise ValueError("generation degree must be nonnegative")
    if lprime < 0:
        raise ValueError("truncation degree must be nonnegative")
    mprime, eps = split_arity(m)
    order = lprime + 1
    p = p_poly(m)
    p_trunc = p.truncated(order)
    geometric = UniPoly.zero()
    power = UniPoly.one()
    for k in range(order):
        geometric = geometric + general_binomial(Fraction(n + k), k) * power
        power = power.mul_trunc(p_trunc, order)
    exponent = Fraction((n + 1) * (eps - 1), 2)
    if variant == "dual_conjecture":
        exponent -= Fraction(1, 2)
    series = binomial_series(exponent, order).mul_trunc(geometric, order)
    g = tuple(series.coeff(k) for k in range(order))
    if g[0] != 1:
        raise AssertionError("generating series must start at 1")
    return GenFunExpansion(m, mprime, eps, n, lprime, variant, g, p)


def delta_substitute(expansion: GenFunExpansion) -> LaurentPoly:
    """Evaluate sum_k g_k * delta(z)^k as an exact Laurent polynomial.

    The result is odd symmetric about 0 with support [-l', l'] whenever
    g_{l'} != 0.
    """
    acc = LaurentPoly.zero()
    power = LaurentPoly.one()
    for gk in expansion.g:
        acc = acc + gk * power
        power = power * DELTA
    return acc
