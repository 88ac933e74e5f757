"""Certified Hölder regularity of symmetric subdivision schemes.

For a convergent symbol a = m * sigma_m**(r+1) * b with b odd symmetric about
0 and support [-p, p], the difference scheme driven by b controls smoothness:
if the Fourier transform B(xi) = b_0 + 2 sum b_j cos(j xi) is nonnegative,
the regularity is bounded below by r - log_m(rho), where rho is the spectral
radius of the folded coefficient matrix

    M[j][k] = b_j                 if k = 0,
              b_|j-mk| + b_{j+mk}    otherwise,

on indices j, k = 0 .. floor((p-1)/(m-1)), and the bound is attained whenever
B is strictly positive.  Everything that decides (positivity, root isolation,
the enclosure of rho) runs in exact rational arithmetic; floating point only
enters the a posteriori disks around non-real eigenvalues and the final log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from . import rootiso
from .laurent import LaurentPoly, UniPoly, fourier_as_tpoly
from .schemes import ParameterError, SchemeSpec, recentered

#: Relative width of the certified enclosure of the spectral radius.
ENCLOSURE_REL_WIDTH = Fraction(1, 10**12)
#: Absolute bisection floor for real-root refinement.
BISECTION_WIDTH = Fraction(1, 10**14)
#: Level used for the iterated-window consistency check.
WINDOW_CHECK_LEVEL = 64
#: Allowed relative deviation of the window estimate from the enclosure.
WINDOW_CHECK_TOLERANCE = 0.02

STRICT = "strictly_positive"
NONNEG = "nonnegative_with_zero"
INDEFINITE = "indefinite"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class PositivityCertificate:
    """Sign classification of B(xi) over [0, pi], decided on q(t), t in [0, 1].

    ``witness`` is a rational interval around a zero of q in [0, 1] when one
    exists (degenerate for an exactly known zero), else None.
    """

    status: str
    tpoly: UniPoly
    witness: Optional[tuple[Fraction, Fraction]] = None


@dataclass(frozen=True)
class FoldedMatrix:
    m: int
    p: int
    dim: int
    rows: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SpectralRadius:
    """Certified enclosure of the spectral radius of a rational matrix.

    ``dominant_real`` records that no eigenvalue, real or complex, can exceed
    the enclosed dominant real root; ``window_consistent`` that the iterated
    e_0 window reproduces the enclosure at level 64 within 2 percent.
    """

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction]
    dominant_real: bool
    window_consistent: bool
    char: UniPoly


@dataclass(frozen=True)
class RegularityReport:
    r: int
    char_poly: UniPoly
    rho_lo: Fraction
    rho_hi: Fraction
    rho_exact: Optional[Fraction]
    regularity: float
    exact: bool
    positivity: PositivityCertificate


@dataclass(frozen=True)
class IteratedMask:
    level: int
    window: tuple[Fraction, ...]


MatrixLike = Union[FoldedMatrix, Sequence[Sequence[Fraction]]]


def _rows_of(matrix: MatrixLike) -> tuple[tuple[Fraction, ...], ...]:
    rows = matrix.rows if isinstance(matrix, FoldedMatrix) else matrix
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise ValueError("matrix must be square")
    return out


def _common_denominator(rows) -> int:
    denom = 1
    for row in rows:
        for entry in row:
            denom = denom * entry.denominator // math.gcd(denom, entry.denominator)
    return denom


# -- positivity --------------------------------------------------------------


def certify_positivity(b: LaurentPoly) -> PositivityCertificate:
    """Exact sign analysis of the Fourier transform of an odd symmetric mask.

    Sign changes of q on (0, 1) are exactly the real roots of its
    odd-multiplicity part there, counted by Sturm sequences; one exact sample
    then fixes the sign between touch points.  No floating point is involved.
    """
    q = fourier_as_tpoly(recentered(b))
    if q.degree <= 0:
        value = q.coeff(0)
        if value > 0:
            return PositivityCertificate(STRICT, q)
        if value == 0:
            raise ParameterError("zero mask has no Fourier sign")
        return PositivityCertificate(INDEFINITE, q)

    q0 = q(_ZERO)
    q1 = q(_ONE)
    p_int = rootiso.from_unipoly(q)
    if q0 < 0 or q1 < 0:
        return PositivityCertificate(INDEFINITE, q, _interior_root_interval(p_int))

    odd = rootiso.odd_multiplicity_part(p_int)
    crossings = rootiso.count_roots(rootiso.sturm_chain(odd), _ZERO, _ONE)
    if rootiso.eval_sign(odd, _ONE) == 0:
        crossings -= 1  # a boundary zero is a touch, not a crossing
    if crossings > 0:
        return PositivityCertificate(INDEFINITE, q, _interior_root_interval(p_int))

    # constant sign on (0, 1) apart from touch points; one sample decides
    if q(_nonroot_sample(q)) < 0:
        return PositivityCertificate(INDEFINITE, q, _interior_root_interval(p_int))

    sq = rootiso.square_free(p_int)
    touches = rootiso.count_roots(rootiso.sturm_chain(sq), _ZERO, _ONE)
    if q0 == 0:
        return PositivityCertificate(NONNEG, q, (_ZERO, _ZERO))
    if touches == 0:
        return PositivityCertificate(STRICT, q)
    if q1 == 0 and touches == 1:
        return PositivityCertificate(NONNEG, q, (_ONE, _ONE))
    return PositivityCertificate(NONNEG, q, _interior_root_interval(p_int))


def _interior_root_interval(p_int) -> Optional[tuple[Fraction, Fraction]]:
    """A refined interval around some root of q met inside [0, 1]."""
    sq = rootiso.square_free(p_int)
    for lo, hi in rootiso.isolate_real_roots(sq):
        if hi <= 0 or lo >= 1:
            continue
        lo2, hi2 = rootiso.refine_root(sq, lo, hi, Fraction(1, 2**40))
        lo2, hi2 = max(lo2, _ZERO), min(hi2, _ONE)
        if lo2 <= hi2:
            return (lo2, hi2)
    return None


def _nonroot_sample(q: UniPoly) -> Fraction:
    den = 2
    while True:
        for num in range(1, den):
            x = Fraction(num, den)
            if q(x) != 0:
                return x
        den += 1


# -- matrices ----------------------------------------------------------------


def folded_matrix(b: LaurentPoly, m: int) -> FoldedMatrix:
    """Fold the two-sided difference-scheme matrix onto indices 0 .. q.

    Requires an odd symmetric derived symbol with p >= 1; the pure-spline
    case p = 0 is handled by the caller directly.
    """
    bc = recentered(b)
    sym = bc.symmetry()
    if sym.kind != "odd" or sym.j0 != 0:
        raise ParameterError("derived symbol must be odd symmetric")
    support = bc.support()
    if support is None:
        raise ParameterError("derived symbol must be nonzero")
    p = support[1]
    if p < 1:
        raise ParameterError("p = 0 has no folded matrix; use the spline shortcut")
    dim = (p - 1) // (m - 1) + 1
    rows = []
    for j in range(dim):
        row = []
        for k in range(dim):
            if k == 0:
                row.append(bc.coeff(j))
            else:
                row.append(bc.coeff(abs(j - m * k)) + bc.coeff(j + m * k))
        rows.append(tuple(row))
    return FoldedMatrix(m=m, p=p, dim=dim, rows=tuple(rows))


def unfolded_matrix(b: LaurentPoly, m: int) -> tuple[tuple[Fraction, ...], ...]:
    """The two-sided window matrix [b_{j-mk}] on indices -q .. q."""
    bc = recentered(b)
    support = bc.support()
    if support is None:
        raise ParameterError("derived symbol must be nonzero")
    p = support[1]
    if p < 1:
        raise ParameterError("p = 0 has no window matrix")
    q = (p - 1) // (m - 1)
    idx = range(-q, q + 1)
    return tuple(tuple(bc.coeff(j - m * k) for k in idx) for j in idx)


def char_poly(matrix: MatrixLike) -> UniPoly:
    """Monic characteristic polynomial det(lambda*I - M), exactly.

    The matrix is scaled to integers and run through the Faddeev-LeVerrier
    recursion, whose divisions are exact over the integers; the result is
    rescaled back, so no rounding occurs at any point.
    """
    rows = _rows_of(matrix)
    n = len(rows)
    denom = _common_denominator(rows)
    mat = [[int(entry * denom) for entry in row] for row in rows]

    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = _int_matmul(mat, aux)
        trace = sum(prod[i][i] for i in range(n))
        assert trace % k == 0, "Faddeev-LeVerrier trace division must be exact"
        ck = -(trace // k)
        for i in range(n):
            prod[i][i] += ck
        aux = prod
        coeffs[n - k] = ck
    return UniPoly([Fraction(coeffs[k], denom ** (n - k)) for k in range(n + 1)])


def _int_matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# -- spectral radius ---------------------------------------------------------


def spectral_radius(matrix: MatrixLike, window_level: int = WINDOW_CHECK_LEVEL) -> SpectralRadius:
    """Certified enclosure of the spectral radius.

    Real eigenvalues are isolated and refined by exact Sturm bisection; the
    largest modulus among them sits at the leftmost or rightmost root.
    Non-real eigenvalues are ruled out by Weierstrass disks around a float
    eigensolve, evaluated exactly on the characteristic polynomial.
    """
    rows = _rows_of(matrix)
    poly = char_poly(rows)
    p_int = rootiso.from_unipoly(poly)
    sq = rootiso.square_free(p_int)
    intervals = rootiso.isolate_real_roots(p_int)

    if not intervals:
        return SpectralRadius(
            lo=_ZERO, hi=_row_sum_bound(rows), exact=None,
            dominant_real=False, window_consistent=False, char=poly,
        )

    refined = {
        key: rootiso.refine_root(sq, *intervals[key], BISECTION_WIDTH)
        for key in {0, len(intervals) - 1}
    }
    lo, hi = max(refined.values(), key=lambda iv: max(abs(iv[0]), abs(iv[1])))
    lo_abs, hi_abs = _interval_abs(lo, hi)
    target = ENCLOSURE_REL_WIDTH * max(_ONE, lo_abs)
    if hi_abs - lo_abs > target:
        lo, hi = rootiso.refine_root(sq, lo, hi, target)
        lo_abs, hi_abs = _interval_abs(lo, hi)

    exact = None
    candidate = rootiso.simplest_in_interval(lo, hi)
    if candidate is not None and rootiso.eval_sign(p_int, candidate) == 0:
        exact = abs(candidate)
        lo_abs = hi_abs = exact

    dominant = _certify_dominance(rows, poly, sq, len(intervals), hi_abs)
    consistent = _window_consistent(rows, lo_abs, hi_abs, window_level)
    return SpectralRadius(
        lo=lo_abs, hi=hi_abs, exact=exact,
        dominant_real=dominant, window_consistent=consistent, char=poly,
    )


def _interval_abs(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if lo > 0:
        return lo, hi
    if hi < 0:
        return -hi, -lo
    return _ZERO, max(-lo, hi)


def _row_sum_bound(rows) -> Fraction:
    return max(sum(abs(x) for x in row) for row in rows)


def _certify_dominance(rows, poly, sq, n_real_distinct, hi_abs) -> bool:
    """No eigenvalue, real or not, exceeds the enclosed dominant real root."""
    if rootiso.degree(sq) == n_real_distinct:
        return True  # every distinct eigenvalue is real and already covered
    mu = np.linalg.eigvals(np.array([[float(x) for x in row] for row in rows]))
    disks = _weierstrass_disks(poly, mu)
    if disks is None:
        return False
    scale = max(1.0, float(hi_abs))
    r_max = max(radius for _, radius in disks)
    if not math.isfinite(r_max) or r_max > 1e-7 * scale:
        return False
    bound = max(center + radius for center, radius in disks)
    return bound <= float(hi_abs) + 2.0 * r_max + 1e-11 * scale


def _weierstrass_disks(poly: UniPoly, mu) -> Optional[list[tuple[float, float]]]:
    """Rigorous (center modulus, radius) covers for all roots of a monic poly.

    With W_i = P(mu_i) / prod_{j != i} (mu_i - mu_j), every root of P lies
    in some disk |z - mu_i| <= n |W_i|; both factors are evaluated in exact
    complex-rational arithmetic over the float approximations.
    """
    n = poly.degree
    points = [(Fraction(float(v.real)), Fraction(float(v.imag))) for v in mu]
    disks: list[tuple[float, float]] = []
    for i, (xr, xi) in enumerate(points):
        vr, vi = _ONE, _ZERO
        for k in range(n - 1, -1, -1):
            vr, vi = vr * xr - vi * xi + poly.coeff(k), vr * xi + vi * xr
        num2 = vr * vr + vi * vi
        den2 = _ONE
        for j, (yr, yi) in enumerate(points):
            if j == i:
                continue
            dr, di = xr - yr, xi - yi
            den2 *= dr * dr + di * di
        if den2 == 0:
            return None
        try:
            w = math.sqrt(num2 / den2)
        except OverflowError:
            return None
        radius = n * w * (1 + 1e-9)
        center = math.hypot(float(xr), float(xi)) * (1 + 1e-12)
        disks.append((center, radius))
    return disks


def _window_consistent(rows, lo_abs, hi_abs, level: int) -> bool:
    if level <= 0 or len(rows) == 1:
        return True
    mid = (lo_abs + hi_abs) / 2
    if mid <= 0:
        return False
    n = len(rows)
    denom = _common_denominator(rows)
    mat = [[int(entry * denom) for entry in row] for row in rows]
    window = [1] + [0] * (n - 1)
    for _ in range(level):
        window = [sum(row[k] * window[k] for k in range(n)) for row in mat]
    head = window[0]  # the true head value times denom**level
    if head <= 0:
        return False
    est_log = (math.log(head) - level * math.log(denom)) / level
    mid_log = math.log(mid.numerator) - math.log(mid.denominator)
    return abs(math.exp(est_log - mid_log) - 1.0) <= WINDOW_CHECK_TOLERANCE


# -- top level ---------------------------------------------------------------


def exact_regularity(spec: SchemeSpec) -> RegularityReport:
    """Hölder regularity r - log_m(rho) with certification flags.

    ``exact`` is True only when the positivity certificate is strict, the
    dominant eigenvalue is certified real with rho > 1/m, and the window
    iteration agrees with the enclosure; a nonnegative-with-zero certificate
    downgrades the value to a lower bound (exact = False).
    """
    b = recentered(spec.b)
    sym = b.symmetry()
    if sym.kind != "odd":
        raise ParameterError(
            "regularity via folding requires an odd symmetric derived symbol"
        )
    support = b.support()
    if support is None:
        raise ParameterError("derived symbol must be nonzero")
    p = support[1]
    cert = certify_positivity(b)
    if p == 0:
        poly = UniPoly((-1, 1))
        return RegularityReport(
            r=spec.r, char_poly=poly,
            rho_lo=_ONE, rho_hi=_ONE, rho_exact=_ONE,
            regularity=float(spec.r), exact=True, positivity=cert,
        )
    sr = spectral_radius(folded_matrix(b, spec.m))
    if cert.status == INDEFINITE:
        return RegularityReport(
            r=spec.r, char_poly=sr.char,
            rho_lo=sr.lo, rho_hi=sr.hi, rho_exact=sr.exact,
            regularity=float("nan"), exact=False, positivity=cert,
        )
    value = _holder_value(spec.r, spec.m, sr)
    certified = (
        cert.status == STRICT
        and sr.dominant_real
        and sr.window_consistent
        and sr.lo > Fraction(1, spec.m)
    )
    return RegularityReport(
        r=spec.r, char_poly=sr.char,
        rho_lo=sr.lo, rho_hi=sr.hi, rho_exact=sr.exact,
        regularity=value, exact=certified, positivity=cert,
    )


def _holder_value(r: int, m: int, sr: SpectralRadius) -> float:
    rho = sr.exact if sr.exact is not None else (sr.lo + sr.hi) / 2
    if rho <= 0:
        return float("nan")
    if sr.exact is not None:
        power = _exact_log_m(sr.exact, m)
        if power is not None:
            return float(r - power)
    log_rho = math.log(rho.numerator) - math.log(rho.denominator)
    return r - log_rho / math.log(m)


def _exact_log_m(rho: Fraction, m: int) -> Optional[int]:
    """log_m(rho) when rho is an exact integer power of m, else None."""

    def power_of(value: int) -> Optional[int]:
        k = 0
        while value % m == 0:
            value //= m
            k += 1
        return k if value == 1 else None

    up = power_of(rho.numerator)
    down = power_of(rho.denominator)
    if up is None or down is None:
        return None
    return up - down


# -- iterated masks ----------------------------------------------------------


def iterate_window(matrix: MatrixLike, levels: int) -> list[IteratedMask]:
    """Windows M^l e_0 for l = 0 .. levels, exactly.

    Entry 0 of the window is the center coefficient of the iterated
    difference mask; its l-th root converges to the spectral radius.
    """
    rows = _rows_of(matrix)
    n = len(rows)
    window = [_ONE] + [_ZERO] * (n - 1)
    out = [IteratedMask(0, tuple(window))]
    for level in range(1, levels + 1):
        window = [sum(row[k] * window[k] for k in range(n)) for row in rows]
        out.append(IteratedMask(level, tuple(window)))
    return out


def full_iterated_mask(b: LaurentPoly, m: int, levels: int) -> LaurentPoly:
    """The iterated derived mask b_l(z) = b(z) b(z^m) ... b(z^(m^(l-1))).

    Levels are capped at 5; the support grows geometrically and the full
    product is only needed for small-level cross-checks.
    """
    if levels < 0:
        raise ParameterError("levels must be nonnegative")
    if levels > 5:
        raise ParameterError("full iterated masks are limited to 5 levels")
    acc = LaurentPoly.one()
    centered = recentered(b)
    for i in range(levels):
        acc = acc * centered.upsampled(m ** i)
    return acc


def decay_estimate(spec: SchemeSpec, levels: int) -> float:
    """Observed decay rate of mesh-normalized divided-difference gaps.

    Runs the order-r divided-difference scheme on delta data and differences
    it once more, normalizing by the mesh width m**-l; the returned ratio of
    successive maxima estimates rho/m.  Diagnostic only; levels <= 12.
    """
    from .subdivision import difference_data

    if not 1 <= levels <= 12:
        raise ParameterError("levels must be between 1 and 12")
    rows = difference_data(spec, spec.r, levels)
    last = max(abs(v) for v in rows[-1].values)
    prev = max(abs(v) for v in rows[-2].values)
    if prev == 0:
        raise ParameterError("difference data vanished; nothing to estimate")
    return float(last / prev)
