"""Exact real-root counting and isolation for rational polynomials.

Polynomials are handled internally as primitive integer coefficient lists
(ascending).  Sign evaluations at rational points are exact integer
computations, so every count and every isolating interval produced here is
certified.  The Sturm chain is built with pseudo-remainders scaled by
positive factors only, which keeps coefficients integral without disturbing
sign variations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .laurent import UniPoly

IntPoly = list[int]


def from_unipoly(p: UniPoly) -> IntPoly:
    """Clear denominators and content; preserves roots and leading sign."""
    if p.degree < 0:
        return []
    denom = 1
    for c in p.coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p.coeffs]
    return primitive(ints)


def primitive(p: IntPoly) -> IntPoly:
    """Divide out the integer content, keeping the leading sign."""
    g = 0
    for c in p:
        g = gcd(g, c)
    if g > 1:
        return [c // g for c in p]
    return list(p)


def degree(p: IntPoly) -> int:
    return len(p) - 1


def derivative(p: IntPoly) -> IntPoly:
    return [i * c for i, c in enumerate(p) if i > 0]


def eval_sign(p: IntPoly, x: Fraction) -> int:
    """Exact sign of p(x) for rational x = u/v, via integer Horner."""
    if not p:
        return 0
    u, v = x.numerator, x.denominator
    acc = 0
    vpow = 1
    for c in reversed(p):
        acc = acc * u + c * vpow
        vpow *= v
    return (acc > 0) - (acc < 0)


def sign_at_infinity(p: IntPoly, positive: bool) -> int:
    if not p:
        return 0
    lead = p[-1]
    s = (lead > 0) - (lead < 0)
    if positive:
        return s
    return s if degree(p) % 2 == 0 else -s


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of lc(b)^k * a by b with k chosen so the scaling is positive."""
    da, db = degree(a), degree(b)
    if da < db:
        return list(a)
    lead = b[-1]
    steps = da - db + 1
    scale = abs(lead) ** steps
    rem = [c * scale for c in a]
    for i in range(da, db - 1, -1):
        coeff = rem[i]
        if coeff % lead != 0:
            # multiply through by |lead| once more; positive factor
            rem = [c * abs(lead) for c in rem]
            coeff = rem[i]
        q = coeff // lead
        if q:
            shift = i - db
            for j, d in enumerate(b):
                rem[shift + j] -= q * d
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    a, b = primitive(a), primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        a, b = b, primitive(_pseudo_remainder(a, b))
    return a


def square_free(p: IntPoly) -> IntPoly:
    """The square-free part p / gcd(p, p'), primitive, same real roots."""
    if degree(p) <= 1:
        return primitive(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return primitive(p)
    q, r = _exact_div(p, g)
    assert r == [], "square-free division must be exact"
    return primitive(q)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def odd_multiplicity_part(p: IntPoly) -> IntPoly:
    """Product of the distinct factors appearing with odd multiplicity.

    Its real roots are exactly the points where p changes sign, which is
    what separates a touching zero from a crossing one.
    """
    p = primitive(p)
    if degree(p) <= 0:
        return [1] if p else []
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return list(p)
    w, r = _exact_div(p, g)
    assert r == [], "multiplicity split must divide exactly"
    odd: IntPoly = [1]
    i = 1
    while degree(w) > 0:
        y = poly_gcd(w, g)
        f, r = _exact_div(w, y)
        assert r == [], "multiplicity split must divide exactly"
        if degree(f) > 0 and i % 2 == 1:
            odd = poly_mul(odd, f)
        g, r = _exact_div(g, y)
        assert r == [], "multiplicity split must divide exactly"
        w = y
        i += 1
    return primitive(odd)


def _exact_div(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide in rational arithmetic, then clear the quotient back to integers."""
    fa = [Fraction(c) for c in a]
    quot = [Fraction(0)] * (degree(a) - degree(b) + 1)
    lead = Fraction(b[-1])
    for i in range(len(quot) - 1, -1, -1):
        q = fa[i + degree(b)] / lead
        quot[i] = q
        if q != 0:
            for j, d in enumerate(b):
                fa[i + j] -= q * d
    if any(c != 0 for c in fa):
        return [], [1]
    denom = 1
    for c in quot:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return [int(c * denom) for c in quot], []


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of a square-free primitive polynomial."""
    chain = [list(p), derivative(p)]
    while chain[-1]:
        rem = _pseudo_remainder(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(primitive([-c for c in rem]))
    return [q for q in chain if q]


def _variations(signs: Sequence[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def variations_at(chain: Sequence[IntPoly], x: Fraction) -> int:
    return _variations([eval_sign(q, x) for q in chain])


def variations_at_infinity(chain: Sequence[IntPoly], positive: bool) -> int:
    return _variations([sign_at_infinity(q, positive) for q in chain])


def count_roots(chain: Sequence[IntPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if hi <= lo:
        return 0
    return variations_at(chain, lo) - variations_at(chain, hi)


def cauchy_bound(p: IntPoly) -> Fraction:
    """All real roots lie in (-B, B] with B = 1 + max |c_i| / |lead|."""
    lead = abs(p[-1])
    biggest = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(biggest, lead)


def root_bound(p: IntPoly) -> Fraction:
    """Power-of-two root bound via Fujiwara: tight even for very lopsided
    coefficients, and dyadic so that bisection endpoints stay cheap."""
    n = degree(p)
    if n <= 0:
        return Fraction(1)
    lead_bits = abs(p[-1]).bit_length()
    exp = 0
    for k in range(1, n + 1):
        c = abs(p[n - k])
        if c == 0:
            continue
        # |c/lead|^(1/k) < 2**ceil((bits(c) - bits(lead) + 1) / k)
        e = -((-(c.bit_length() - lead_bits + 1)) // k)
        exp = max(exp, e)
    return Fraction(2) ** (exp + 1)


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], one distinct real root of p in each.

    ``p`` need not be square-free; isolation runs on the square-free part.
    """
    sq = square_free(p)
    if degree(sq) <= 0:
        return []
    chain = sturm_chain(sq)
    bound = root_bound(sq)
    total = variations_at(chain, -bound) - variations_at(chain, bound)
    if total == 0:
        return []
    result: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, k = stack.pop()
        if k == 1:
            result.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_roots(chain, lo, mid)
        if left:
            stack.append((lo, mid, left))
        if k - left:
            stack.append((mid, hi, k - left))
    result.sort()
    return result


def refine_root(
    p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of the square-free part by bisection.

    Stops once hi - lo <= width, or immediately if an endpoint evaluation
    hits the root exactly.
    """
    s_hi = eval_sign(p, hi)
    if s_hi == 0:
        return (hi, hi)
    s_lo = eval_sign(p, lo)
    if s_lo == 0:
        # lo is a root of p, but not the one isolated here (the interval is
        # half-open); move the left endpoint inward until it carries a sign.
        step = (hi - lo) / 4
        while True:
            lo2 = lo + step
            if lo2 >= hi:
                step /= 4
                continue
            s = eval_sign(p, lo2)
            if s == 0:
                return (lo2, lo2)  # landed exactly on the isolated root
            if s == s_hi:
                hi = lo2  # overshot the root; shrink from the right
                step /= 4
                continue
            lo, s_lo = lo2, s
            break
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = eval_sign(p, mid)
        if s_mid == 0:
            return (mid, mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """The rational with smallest denominator in [lo, hi], via continued fractions."""
    if hi < lo:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        inner = simplest_in_interval(-hi, -lo)
        return -inner if inner is not None else None

    def rec(a: Fraction, b: Fraction) -> Fraction:
        ceil_a = -((-a.numerator) // a.denominator)
        if ceil_a <= b:
            return Fraction(ceil_a)
        floor_a = a.numerator // a.denominator
        return floor_a + 1 / rec(1 / (b - floor_a), 1 / (a - floor_a))

    return rec(lo, hi)
