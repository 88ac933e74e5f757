"""Exact Laurent polynomials and ordinary polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` throughout; no floating point
enters any computation in this module.  A Laurent polynomial is stored as a
contiguous coefficient run together with the exponent of its first entry, so
``z**-1 + 2 + z`` is ``LaurentPoly((1, 2, 1), offset=-1)``.  The zero
polynomial is canonically the empty run with offset 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

Q = Fraction

QLike = Union[Fraction, int, str]


def as_rational(value: QLike) -> Fraction:
    """Coerce an int, a ``p/q`` string, or a Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """Render ``p/q``, or bare ``p`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Symmetry(NamedTuple):
    """Classification of a coefficient sequence under index reflection.

    ``kind`` is ``"odd"`` (palindrome of odd length, a_{j0+j} = a_{j0-j},
    centred at the integer ``j0``), ``"even"`` (palindrome of even length,
    a_{j0+j} = a_{j0+1-j}, centred halfway between ``j0`` and ``j0 + 1``),
    or ``"none"``.  ``j0`` is None when there is no symmetry.
    """

    kind: str
    j0: Optional[int]


class LaurentPoly:
    """Immutable Laurent polynomial with Fraction coefficients."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Iterable[QLike] = (), offset: int = 0):
        run = [as_rational(c) for c in coeffs]
        lo = 0
        hi = len(run)
        while hi > lo and run[hi - 1] == 0:
            hi -= 1
        while lo < hi and run[lo] == 0:
            lo += 1
        if lo == hi:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = offset + lo
            self.coeffs = tuple(run[lo:hi])

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: QLike, exponent: int) -> "LaurentPoly":
        return cls((coeff,), exponent)

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> Optional[tuple[int, int]]:
        """Exponent range ``(lo, hi)`` of nonzero terms, or None if zero."""
        if not self.coeffs:
            return None
        return (self.offset, self.offset + len(self.coeffs) - 1)

    def coeff(self, exponent: int) -> Fraction:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        """Yield (exponent, coefficient) pairs for nonzero entries."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.offset + i, c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.offset == other.offset and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        terms = ", ".join(f"{format_rational(c)}*z^{e}" for e, c in self)
        return f"LaurentPoly({terms})"

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple(-c for c in self.coeffs), self.offset)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        run = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            run[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            run[other.offset - lo + i] += c
        return LaurentPoly(run, lo)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else -as_rational(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            if c == 0:
                return LaurentPoly()
            return LaurentPoly(tuple(c * a for a in self.coeffs), self.offset)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        run = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    run[i + j] += a * b
        return LaurentPoly(run, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined for Laurent polynomials")
        result = LaurentPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by the monomial z**k."""
        return LaurentPoly(self.coeffs, self.offset + k)

    def equals_up_to_shift(self, other: "LaurentPoly") -> bool:
        """True when self = z**k * other for some integer k."""
        # coefficient runs are trimmed at both ends, so this is exact
        return self.coeffs == other.coeffs

    def reversed(self) -> "LaurentPoly":
        """Substitute z -> 1/z (mirror the coefficient sequence)."""
        if self.is_zero:
            return self
        hi = self.offset + len(self.coeffs) - 1
        return LaurentPoly(tuple(reversed(self.coeffs)), -hi)

    def upsampled(self, m: int) -> "LaurentPoly":
        """Substitute z -> z**m, spreading coefficients m apart."""
        if m < 1:
            raise ValueError("upsampling factor must be positive")
        if self.is_zero or m == 1:
            return self
        run = [Fraction(0)] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            run[i * m] = c
        return LaurentPoly(run, self.offset * m)

    def __call__(self, x: QLike) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = as_rational(x)
        if self.is_zero:
            return Fraction(0)
        if x == 0:
            if self.offset < 0:
                raise ZeroDivisionError("negative exponents at z = 0")
            return self.coeff(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.offset

    # -- calculus and structure ----------------------------------------------

    def derivative_at_one(self, k: int = 1) -> Fraction:
        """Exact k-th derivative at z = 1.

        Each term c*z^e contributes c * e*(e-1)*...*(e-k+1), which covers
        negative exponents as well.
        """
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        total = Fraction(0)
        for e, c in self:
            ff = 1
            for i in range(k):
                ff *= e - i
            total += c * ff
        return total

    def divide_exact(self, divisor: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Return self / divisor when the division is exact, else None."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly()
        rem = list(self.coeffs)
        div = divisor.coeffs
        if len(rem) < len(div):
            return None
        quot = [Fraction(0)] * (len(rem) - len(div) + 1)
        lead = div[-1]
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(div) - 1] / lead
            quot[i] = q
            if q != 0:
                for j, d in enumerate(div):
                    rem[i + j] -= q * d
        if any(c != 0 for c in rem):
            return None
        return LaurentPoly(quot, self.offset - divisor.offset)

    def symmetry(self) -> Symmetry:
        """Detect palindromic coefficient symmetry.

        Odd-length palindromes are "odd" symmetric about an integer index;
        even-length palindromes are "even" symmetric about a half-integer.
        The zero polynomial and single-coefficient masks are odd symmetric.
        """
        if self.is_zero:
            return Symmetry("odd", 0)
        n = len(self.coeffs)
        if any(self.coeffs[i] != self.coeffs[n - 1 - i] for i in range(n // 2 + 1)):
            return Symmetry("none", None)
        index_sum = 2 * self.offset + n - 1
        if n % 2 == 1:
            return Symmetry("odd", index_sum // 2)
        return Symmetry("even", (index_sum - 1) // 2)


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[QLike] = ()):
        run = [as_rational(c) for c in coeffs]
        while run and run[-1] == 0:
            run.pop()
        self.coeffs = tuple(run)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"UniPoly([{body}])"

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return UniPoly(tuple(c * a for a in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        run = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    run[i + j] += a * b
        return UniPoly(run)

    __rmul__ = __mul__

    def mul_trunc(self, other: "UniPoly", order: int) -> "UniPoly":
        """Product modulo y**order."""
        run = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= order:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= order:
                    break
                if b != 0:
                    run[i + j] += a * b
        return UniPoly(run)

    def truncated(self, order: int) -> "UniPoly":
        return UniPoly(self.coeffs[:order])

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for Fraction input."""
        if isinstance(x, (int, str)):
            x = as_rational(x)
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))


def fourier_as_tpoly(b: LaurentPoly) -> UniPoly:
    """Rewrite the Fourier transform of a symmetric mask as a polynomial in t.

    For b odd symmetric about 0, B(xi) = b_0 + 2*sum_{j>=1} b_j cos(j xi) is a
    polynomial in t = sin^2(xi/2) because cos(j xi) = T_j(1 - 2t).  The map is
    exact; composing back through t = sin^2(xi/2) recovers B pointwise.
    """
    sym = b.symmetry()
    if sym.kind != "odd" or sym.j0 != 0:
        raise ValueError("mask must be odd symmetric and centred at index 0")
    if b.is_zero:
        return UniPoly.zero()
    p = b.offset + len(b.coeffs) - 1
    u = UniPoly((1, -2))  # cos(xi) = 1 - 2t
    t_prev = UniPoly.one()
    t_curr = u
    q = UniPoly((b.coeff(0),))
    for j in range(1, p + 1):
        q = q + 2 * b.coeff(j) * t_curr
        t_prev, t_curr = t_curr, 2 * u * t_curr - t_prev
    return q
