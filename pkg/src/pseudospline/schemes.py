"""Construction and analysis of symmetric m-ary subdivision symbols.

A subdivision scheme with arity m and mask a = (a_j) refines data by
f_{l+1,j} = sum_k a_{j-mk} f_{l,k}; its symbol is the Laurent polynomial
a(z).  Convergent symbols factor as a = m * sigma_m**(r+1) * b with
sigma_m(z) = (1 + z + ... + z**(m-1))/m, where r is the polynomial
generation degree and b the derived symbol driving the difference scheme.

The constructors in this module cover B-splines, the pseudo-spline families
interpolating between B-splines and Dubuc-Deslauriers schemes, the primal
and dual Dubuc-Deslauriers (point-sampling) families, Lian's interpolatory
family for odd arity, and the one-parameter tension blend between the
degree-1 B-spline and the 4-point-style scheme of the same arity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .genfun import DELTA, delta_substitute, split_arity, taylor_g
from .laurent import LaurentPoly, Q, QLike, Symmetry, as_rational

FAMILIES = (
    "pseudo",
    "bspline",
    "dd-primal",
    "dd-dual",
    "dd-dual-conjecture",
    "lian",
    "tension",
    "custom",
)


class ParameterError(ValueError):
    """A family parameter outside its documented domain."""


def sigma(m: int) -> LaurentPoly:
    """The smoothing factor sigma_m(z) = (1 + z + ... + z**(m-1)) / m."""
    if m < 2:
        raise ParameterError("arity must be at least 2")
    return LaurentPoly([Fraction(1, m)] * m)


def falling_factorial(x: Fraction, k: int) -> Fraction:
    acc = Fraction(1)
    for i in range(k):
        acc *= x - i
    return acc


@dataclass(frozen=True)
class SchemeSpec:
    """A constructed scheme: symbol, derived symbol, and family metadata.

    ``tau`` is the parametric shift a'(1)/m fixing the parametrization
    t_{l+1,0} = t_{l,0} - tau/m**(l+1); ``r`` is the exponent in the stored
    factorization a = m * sigma_m**(r+1) * b.
    """

    family: str
    m: int
    a: LaurentPoly
    b: LaurentPoly
    r: int
    tau: Fraction
    n: Optional[int] = None
    l: Optional[int] = None
    omega: Optional[Fraction] = None

    def __post_init__(self):
        check = self.b * sigma(self.m) ** (self.r + 1) * self.m
        if check != self.a:
            raise AssertionError("stored factorization does not reproduce the symbol")


def _strip_sigma(a: LaurentPoly, m: int) -> tuple[int, LaurentPoly]:
    """Maximal e and quotient q with a = sigma_m**e * q."""
    s = sigma(m)
    e = 0
    quotient = a
    while True:
        nxt = quotient.divide_exact(s)
        if nxt is None:
            return e, quotient
        e += 1
        quotient = nxt


def recentered(b: LaurentPoly) -> LaurentPoly:
    """Shift a palindromic symbol so its centre sits at 0 (or at 1/2)."""
    sym = b.symmetry()
    if sym.kind == "none" or b.is_zero:
        return b
    return b.shifted(-sym.j0)


def scheme_from_symbol(
    a: LaurentPoly,
    m: int,
    family: str = "custom",
    n: Optional[int] = None,
    l: Optional[int] = None,
    omega: Optional[Fraction] = None,
) -> SchemeSpec:
    """Wrap a convergent symbol, factoring out the largest sigma_m power."""
    e, quotient = _strip_sigma(a, m)
    if e == 0 or a.derivative_at_one(0) != m:
        raise ParameterError("symbol does not satisfy the convergence conditions")
    b = quotient * Fraction(1, m)
    if b.derivative_at_one(0) != 1:
        raise AssertionError("derived symbol must be normalized to b(1) = 1")
    tau = a.derivative_at_one(1) / m
    return SchemeSpec(family=family, m=m, a=a, b=b, r=e - 1, tau=tau, n=n, l=l, omega=omega)


def _require_odd(l: int, name: str) -> int:
    if l % 2 != 1:
        raise ParameterError(f"{name} must be odd")
    return (l - 1) // 2


def make_bspline(m: int, n: int) -> SchemeSpec:
    """B-spline scheme of generation degree n: a = m * sigma_m**(n+1)."""
    if n < 0:
        raise ParameterError("degree must be nonnegative")
    a = m * sigma(m) ** (n + 1)
    tau = Fraction((m - 1) * (n + 1), 2)
    return SchemeSpec(family="bspline", m=m, a=a, b=LaurentPoly.one(), r=n, tau=tau, n=n)

def make_pseudo_spline(m: int, n: int, l: int) -> SchemeSpec:
    """Pseudo-spline of type (n, l): generation degree n, reproduction target l.

    l must be odd; l' = (l-1)/2 fixes the truncation order of the generating
    series.  The derived symbol is odd symmetric about 0 with support
    [-l', l'], and the full symbol sits on [-l', (m-1)(n+1) + l'].
    """
    lprime = _require_odd(l, "l")
    if n < 0:
        raise ParameterError("generation degree must be nonnegative")
    expansion = taylor_g(m, n, lprime, "primal")
    b = delta_substitute(expansion)
    extra, b = _strip_sigma(b, m)
    a = m * sigma(m) ** (n + 1 + extra) * b
    tau = a.derivative_at_one(1) / m
    return SchemeSpec(
        family="pseudo", m=m, a=a, b=b, r=n + extra, tau=tau, n=n, l=l
    )


def _lagrange_value(l: int, j: int, x: Fraction) -> Fraction:
    """Lagrange basis polynomial on the integer nodes -l' .. l'+1, at x."""
    lprime = (l - 1) // 2
    num = Fraction(1)
    den = 1
    for k in range(-lprime, lprime + 2):
        if k == j:
            continue
        num *= x - k
        den *= j - k
    return num / den


def make_dd_primal(m: int, lprime: int) -> SchemeSpec:
    """Primal (2l'+2)-point interpolatory scheme by local polynomial sampling.

    New values at arguments s/m, s = 1 .. m-1, come from the degree-(2l'+1)
    interpolant of the 2l'+2 nearest old values; old values are kept, so the
    mask is interpolatory and odd symmetric about 0.
    """
    if lprime < 0:
        raise ParameterError("lprime must be nonnegative")
    l = 2 * lprime + 1
    a = LaurentPoly.one()
    for s in range(1, m):
        x = Fraction(s, m)
        for j in range(-lprime, lprime + 2):
            a = a + LaurentPoly.monomial(_lagrange_value(l, j, x), s - m * j)
    return scheme_from_symbol(a, m, family="dd-primal", n=l, l=l)


def make_dd_dual(m: int, lprime: int) -> SchemeSpec:
    """Dual (2l'+2)-point scheme: every new value is a midpoint-style sample.

    All m new values per old interval are taken from the local interpolant at
    the half-grid arguments (2s+1)/(2m), s = 0 .. m-1; no old value survives,
    which makes the mask even symmetric.
    """
    if lprime < 0:
        raise ParameterError("lprime must be nonnegative")
    l = 2 * lprime + 1
    a = LaurentPoly.zero()
    for s in range(m):
        x = Fraction(2 * s + 1, 2 * m)
        for j in range(-lprime, lprime + 2):
            a = a + LaurentPoly.monomial(_lagrange_value(l, j, x), s - m * j)
    return scheme_from_symbol(a, m, family="dd-dual", n=l, l=l)


def make_dd_dual_conjecture(m: int, n: int) -> SchemeSpec:
    """Closed-form candidate for the dual (2l'+2)-point scheme, n = l = 2l'+1.

    The derived part is (1+z)/2 times the degree-l' Taylor polynomial of the
    generating series with an extra 1/sqrt(1-y) factor, evaluated at delta(z);
    the symbol is m * sigma_m**(n+1) times that product.
    """
    lprime = _require_odd(n, "n")
    expansion = taylor_g(m, n, lprime, "dual_conjecture")
    half = LaurentPoly((Fraction(1, 2), Fraction(1, 2)))
    bb = delta_substitute(expansion) * half
    a = m * sigma(m) ** (n + 1) * bb
    return scheme_from_symbol(a, m, family="dd-dual-conjecture", n=n, l=n)


def make_interpolatory_lian(m: int, lprime: int) -> SchemeSpec:
    """Interpolatory family for odd arity with mask given by integer products.

    Support is [-(m*l' + m'), m*l' + m'] and the scheme coincides with the
    pseudo-spline of type (2l', 2l'+1) up to the interpolatory centring.
    """
    if m % 2 != 1:
        raise ParameterError("arity must be odd")
    if lprime < 0:
        raise ParameterError("lprime must be nonnegative")
    mprime, _ = split_arity(m)
    a = LaurentPoly.zero()

    def mask_value(j: int, k: int) -> Fraction:
        num = 1
        for i in range(1, lprime - j + 1):
            num *= i * m + k
        for i in range(1, lprime + j + 1):
            num *= i * m - k
        den = m ** (2 * lprime) * factorial(lprime - j) * factorial(lprime + j)
        return Fraction(num, den)

    entries: dict[int, Fraction] = {}
    for k in range(0, mprime + 1):
        entries[k] = mask_value(0, k)
    for j in range(1, lprime + 1):
        for k in range(m * j - mprime, m * j + mprime + 1):
            entries[k] = mask_value(j, k)
    for k, value in sorted(entries.items()):
        if k == 0:
            a = a + LaurentPoly.monomial(value, 0)
        else:
            a = a + LaurentPoly.monomial(value, k) + LaurentPoly.monomial(value, -k)
    return scheme_from_symbol(a, m, family="lian", n=2 * lprime, l=2 * lprime + 1)


def make_tension(m: int, omega: QLike) -> SchemeSpec:
    """Tension blend (1-w) * [degree-1 B-spline] + w * [type (3,3) scheme].

    Both endpoint symbols are centred so the blend stays odd symmetric; the
    stored factorization keeps r = 1 uniformly in w, which makes the derived
    symbol's folded matrix 2x2 for every w in (0, 1].
    """
    w = as_rational(omega)
    if not 0 <= w <= 1:
        raise ParameterError("omega must lie in [0, 1]")
    s = sigma(m)
    b33 = LaurentPoly.one() + Fraction(2 * (m * m - 1), 3) * DELTA
    b_omega = (1 - w) * LaurentPoly.one() + w * (s * s).shifted(1 - m) * b33
    a = m * s * s * b_omega
    tau = a.derivative_at_one(1) / m
    return SchemeSpec(
        family="tension", m=m, a=a, b=b_omega, r=1, tau=tau, omega=w
    )


# -- analysis ----------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceCertificate:
    """Necessary conditions for convergence: all m coefficient phase sums are 1.

    ``witness`` is the smallest residue class whose phase sum differs from 1,
    or None when the conditions hold.
    """

    passes: bool
    witness: Optional[int] = None


@dataclass(frozen=True)
class AnalysisReport:
    tau: Fraction
    support: Optional[tuple[int, int]]
    phi_width: Optional[Fraction]
    symmetry: Symmetry
    convergence: ConvergenceCertificate
    generation_degree: int
    reproduction_degree: int


def check_convergence(a: LaurentPoly, m: int) -> ConvergenceCertificate:
    for s in range(m):
        total = sum((c for e, c in a if e % m == s), Fraction(0))
        if total != 1:
            return ConvergenceCertificate(False, s)
    return ConvergenceCertificate(True, None)


def analyze(a: LaurentPoly, m: int) -> AnalysisReport:
    """Structural report on an arbitrary mask; never raises on bad masks.

    The generation degree is the largest n with sigma_m**(n+1) dividing the
    symbol; the reproduction degree is the largest k <= n with
    a^(i)(1) = m * tau * (tau-1) * ... * (tau-i+1) for all i <= k, i.e. the
    degree through which polynomial data is reproduced under the shifted
    parametrization.  Both report -1 when the mask is not convergent.
    """
    if m < 2:
        raise ParameterError("arity must be at least 2")
    if a.is_zero:
        return AnalysisReport(
            Fraction(0), None, None, a.symmetry(),
            ConvergenceCertificate(False, 0), -1, -1,
        )
    tau = a.derivative_at_one(1) / m
    support = a.support()
    assert support is not None
    width = Fraction(support[1] - support[0], m - 1)
    convergence = check_convergence(a, m)
    if not convergence.passes:
        return AnalysisReport(tau, support, width, a.symmetry(), convergence, -1, -1)
    e, _ = _strip_sigma(a, m)
    generation = e - 1
    reproduction = -1
    for k in range(0, generation + 1):
        if a.derivative_at_one(k) == m * falling_factorial(tau, k):
            reproduction = k
        else:
            break
    return AnalysisReport(tau, support, width, a.symmetry(), convergence, generation, reproduction)


@dataclass(frozen=True)
class ReproductionSystem:
    """Triangular system A d = c tying derived-symbol derivatives to the shift.

    Row k states sum_j m * C(k,j) * (sigma_m**(n+1))^(k-j)(1) * b^(j)(1)
    = m * tau^(k)_falling, for k = 0 .. l.  ``d`` is the forward-substitution
    solution, i.e. the derivatives b(1), b'(1), ..., b^(l)(1) any derived
    symbol must match to reproduce degree l at shift tau.
    """

    m: int
    n: int
    l: int
    tau: Fraction
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    d: tuple[Fraction, ...]


def reproduction_system(m: int, n: int, l: int, tau: QLike) -> ReproductionSystem:
    if l < 0:
        raise ParameterError("l must be nonnegative")
    t = as_rational(tau)
    base = sigma(m) ** (n + 1)
    derivs = [base.derivative_at_one(k) for k in range(l + 1)]
    rows = []
    rhs = []
    for k in range(l + 1):
        row = [
            m * comb(k, j) * derivs[k - j] if j <= k else Fraction(0)
            for j in range(l + 1)
        ]
        rows.append(tuple(Fraction(x) for x in row))
        rhs.append(m * falling_factorial(t, k))
    d: list[Fraction] = []
    for k in range(l + 1):
        acc = rhs[k]
        for j in range(k):
            acc -= rows[k][j] * d[j]
        d.append(acc / rows[k][k])
    return ReproductionSystem(m, n, l, t, tuple(rows), tuple(rhs), tuple(d))
