"""Exact refinement of control data and sampling of cardinal limits.

One refinement step maps level-l data f to level-(l+1) data via

    f'_j = sum_k a_{j-mk} f_k,      i.e.  f'(z) = a(z) f(z^m),

and the parameter attached to index j at level l is t = (j - s_l) / m**l
with the accumulated shift s_l = tau (m**l - 1)/(m - 1); this keeps linear
data fixed pointwise, so limits of symmetric schemes come out centered.
All values stay rational end to end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly
from .schemes import ParameterError, SchemeSpec, sigma

#: Hard cap on refinement depth; data size grows like m**levels.
MAX_LEVELS = 12


@dataclass(frozen=True)
class SubdivisionState:
    """Control data at one refinement level, with its parameter map."""

    spec: SchemeSpec
    level: int
    data: LaurentPoly

    def shift(self) -> Fraction:
        m = self.spec.m
        return self.spec.tau * Fraction(m ** self.level - 1, m - 1)

    @property
    def t0(self) -> Fraction:
        """Parameter attached to index 0; obeys t0' = t0 - tau/m**(l+1)."""
        return self.t_of(0)

    def t_of(self, index: int) -> Fraction:
        return (Fraction(index) - self.shift()) / self.spec.m ** self.level

    def refined(self) -> "SubdivisionState":
        nxt = self.spec.a * self.data.upsampled(self.spec.m)
        return SubdivisionState(self.spec, self.level + 1, nxt)

    def samples(self) -> list[tuple[Fraction, Fraction]]:
        """(t, value) pairs over the support of the data, in t order."""
        support = self.data.support()
        if support is None:
            return []
        lo, hi = support
        return [(self.t_of(j), self.data.coeff(j)) for j in range(lo, hi + 1)]


@dataclass(frozen=True)
class DividedDifferenceScheme:
    order: int
    symbol: LaurentPoly


@dataclass(frozen=True)
class DifferenceRow:
    level: int
    values: tuple[Fraction, ...]


def initial_state(spec: SchemeSpec, values=None, offset: int = 0) -> SubdivisionState:
    """Level-0 state; default initial data is the delta sequence at index 0."""
    if values is None:
        data = LaurentPoly.one()
    elif isinstance(values, LaurentPoly):
        data = values
    else:
        data = LaurentPoly([Fraction(v) for v in values], offset=offset)
    return SubdivisionState(spec, 0, data)


def cardinal_samples(spec: SchemeSpec, levels: int) -> list[tuple[Fraction, Fraction]]:
    """Exact samples of the level-`levels` approximation to the cardinal limit.

    Starting from delta data, the returned (t, value) pairs converge to the
    graph of the basis function; t = 0 always carries a sample.
    """
    if not 1 <= levels <= MAX_LEVELS:
        raise ParameterError(f"levels must be between 1 and {MAX_LEVELS}")
    state = initial_state(spec)
    for _ in range(levels):
        state = state.refined()
    return state.samples()


def support_interval(spec: SchemeSpec) -> tuple[Fraction, Fraction]:
    """Exact t-support of the cardinal limit: [(j0-tau)/(m-1), (j1-tau)/(m-1)]."""
    support = spec.a.support()
    assert support is not None
    j0, j1 = support
    m = spec.m
    return (Fraction(j0 - spec.tau, m - 1), Fraction(j1 - spec.tau, m - 1))


def divided_difference_symbol(spec: SchemeSpec, k: int) -> DividedDifferenceScheme:
    """The scheme a / sigma**k driving order-k divided differences of the data.

    Exists as a Laurent polynomial iff k <= r + 1; the divided-difference
    normalization m**(kl) is built in, so data under this scheme grows like
    samples of the k-th derivative.
    """
    if k < 0:
        raise ParameterError("difference order must be nonnegative")
    if k > spec.r + 1:
        raise ParameterError(
            f"order {k} differences need sigma^{k} | a; only {spec.r + 1} available"
        )
    quotient = spec.a.divide_exact(sigma(spec.m) ** k)
    assert quotient is not None, "sigma power must divide the symbol exactly"
    return DividedDifferenceScheme(order=k, symbol=quotient)


def difference_data(spec: SchemeSpec, order: int, levels: int) -> list[DifferenceRow]:
    """Mesh-normalized gaps of order-`order` divided-difference data, per level.

    Runs the a/sigma**order scheme on delta data and emits, at each level l,
    the once-differenced values scaled by the mesh width m**-l.  Their maxima
    decay like (rho/m)**l, which is what the decay diagnostics ratio; at
    level 0 the gaps are the plain [1, -1] pattern.
    """
    if not 1 <= levels <= MAX_LEVELS:
        raise ParameterError(f"levels must be between 1 and {MAX_LEVELS}")
    scheme = divided_difference_symbol(spec, order)
    data = LaurentPoly.one()
    rows = []
    for level in range(levels + 1):
        gaps = (data - data.shifted(1)) * Fraction(1, spec.m ** level)
        values = tuple(c for _, c in gaps) or (Fraction(0),)
        rows.append(DifferenceRow(level, values))
        if level < levels:
            data = scheme.symbol * data.upsampled(spec.m)
    return rows
