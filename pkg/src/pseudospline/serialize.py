"""Canonical JSON documents and the parameter grammar shared by CLI and service.

Rationals render as "p/q" ("p" when the denominator is 1), Laurent
polynomials as {"offset", "coeffs"}.  ``dumps_canonical`` fixes key order,
indentation and float rendering so that re-serializing a parsed document
reproduces it byte for byte.

``build_scheme`` is the single entry point turning user-supplied family
parameters into a SchemeSpec; the CLI and the HTTP service both call it, so
a given parameter set is accepted or rejected with the same message in both
front ends.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import regularity as reg
from . import schemes
from .laurent import LaurentPoly, UniPoly, format_rational
from .regularity import RegularityReport, exact_regularity
from .schemes import ParameterError, SchemeSpec

#: Artifact-level caps keeping every front-end request desk scale.
M_MAX = 9
N_MAX = 12
LPRIME_MAX = 30

POSITIVITY_LABELS = {
    reg.STRICT: "strict",
    reg.NONNEG: "nonneg",
    reg.INDEFINITE: "indefinite",
}


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParameterError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"invalid rational {text!r}") from exc


def laurent_to_json(p: LaurentPoly) -> dict:
    return {"offset": p.offset, "coeffs": [format_rational(c) for c in p.coeffs]}


def laurent_from_json(obj: Any) -> LaurentPoly:
    if not isinstance(obj, dict) or set(obj) != {"offset", "coeffs"}:
        raise ParameterError("Laurent polynomial documents need offset and coeffs")
    return LaurentPoly(
        [parse_rational(c) for c in obj["coeffs"]], offset=int(obj["offset"])
    )


def unipoly_to_json(p: UniPoly) -> list[str]:
    # ascending order, constant term first
    return [format_rational(c) for c in p.coeffs]


def scheme_to_json(spec: SchemeSpec) -> dict:
    doc = {
        "family": spec.family,
        "m": spec.m,
        "n": spec.n,
        "l": spec.l,
        "tau": format_rational(spec.tau),
        "a": laurent_to_json(spec.a),
        "b": laurent_to_json(spec.b),
        "r": spec.r,
    }
    if spec.omega is not None:
        doc["omega"] = format_rational(spec.omega)
    return doc


def scheme_from_json(obj: Any) -> SchemeSpec:
    """Rebuild a SchemeSpec; the stored factorization is re-verified."""
    if not isinstance(obj, dict):
        raise ParameterError("scheme documents must be JSON objects")
    try:
        omega = obj.get("omega")
        return SchemeSpec(
            family=str(obj["family"]),
            m=int(obj["m"]),
            a=laurent_from_json(obj["a"]),
            b=laurent_from_json(obj["b"]),
            r=int(obj["r"]),
            tau=parse_rational(obj["tau"]),
            n=None if obj.get("n") is None else int(obj["n"]),
            l=None if obj.get("l") is None else int(obj["l"]),
            omega=None if omega is None else parse_rational(omega),
        )
    except KeyError as exc:
        raise ParameterError(f"scheme document lacks field {exc.args[0]!r}") from exc


def regularity_to_json(report: RegularityReport) -> dict:
    value: Optional[float] = report.regularity
    if value is not None and math.isnan(value):
        value = None
    return {
        "r": report.r,
        "char_poly": unipoly_to_json(report.char_poly),
        "rho": {
            "lo": format_rational(report.rho_lo),
            "hi": format_rational(report.rho_hi),
            "exact": None if report.rho_exact is None else format_rational(report.rho_exact),
        },
        "regularity": value,
        "exact": report.exact,
        "positivity": POSITIVITY_LABELS[report.positivity.status],
    }


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)


def display_regularity(report: RegularityReport) -> str:
    """Five-decimal display value, round-half-even per the table convention."""
    if math.isnan(report.regularity):
        return "n/a"
    return f"{report.regularity:.5f}"


def rho_value(report: RegularityReport) -> float:
    if report.rho_exact is not None:
        return float(report.rho_exact)
    return float((report.rho_lo + report.rho_hi) / 2)


# -- parameter grammar -------------------------------------------------------

FAMILY_USAGE = {
    "pseudo": "pseudo needs m, n and odd l",
    "bspline": "bspline needs m and n",
    "dd-primal": "dd-primal needs m and lprime",
    "dd-dual": "dd-dual needs m and lprime",
    "dd-dual-conjecture": "dd-dual-conjecture needs m and odd n",
    "lian": "lian needs odd m and lprime",
    "tension": "tension needs m and omega in [0, 1]",
}


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool):
        raise ParameterError(f"{name} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ParameterError(f"{name} must be an integer") from None
    raise ParameterError(f"{name} must be an integer")


def bounded_int(value: Any, name: str, lo: int, hi: int) -> int:
    number = _as_int(value, name)
    if not lo <= number <= hi:
        raise ParameterError(f"{name} must be between {lo} and {hi}")
    return number


def build_scheme(
    family: str,
    m: Any,
    n: Any = None,
    l: Any = None,
    lprime: Any = None,
    omega: Any = None,
) -> SchemeSpec:
    """Construct the scheme named by front-end parameters, or raise ParameterError.

    ``l`` and ``lprime`` are interchangeable where a family admits both
    spellings: interpolatory-style families take l' directly, pseudo-splines
    take the odd l = 2l' + 1.
    """
    if family not in FAMILY_USAGE:
        known = ", ".join(sorted(FAMILY_USAGE))
        raise ParameterError(f"unknown family {family!r}; known families: {known}")
    arity = bounded_int(m, "m", 2, M_MAX)

    def need(value: Any, name: str) -> Any:
        if value is None:
            raise ParameterError(FAMILY_USAGE[family])
        return value

    def lprime_of(cap: int = LPRIME_MAX) -> int:
        # either spelling; l must be odd to name an l'
        if lprime is not None:
            return bounded_int(lprime, "lprime", 0, cap)
        full = bounded_int(need(l, "l"), "l", 1, 2 * cap + 1)
        if full % 2 != 1:
            raise ParameterError("l must be odd")
        return (full - 1) // 2

    if family == "pseudo":
        degree = bounded_int(need(n, "n"), "n", 0, N_MAX)
        if l is None and lprime is not None:
            full = 2 * bounded_int(lprime, "lprime", 0, LPRIME_MAX) + 1
        else:
            full = bounded_int(need(l, "l"), "l", 1, 2 * LPRIME_MAX + 1)
        return schemes.make_pseudo_spline(arity, degree, full)
    if family == "bspline":
        return schemes.make_bspline(arity, bounded_int(need(n, "n"), "n", 0, N_MAX))
    if family == "dd-primal":
        return schemes.make_dd_primal(arity, lprime_of())
    if family == "dd-dual":
        return schemes.make_dd_dual(arity, lprime_of())
    if family == "dd-dual-conjecture":
        degree = bounded_int(need(n, "n"), "n", 1, 2 * LPRIME_MAX + 1)
        return schemes.make_dd_dual_conjecture(arity, degree)
    if family == "lian":
        return schemes.make_interpolatory_lian(arity, lprime_of())
    value = need(omega, "omega")
    try:
        w = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParameterError(f"invalid rational {value!r}") from exc
    return schemes.make_tension(arity, w)


def sweep_tension(m: Any, steps: Any) -> list[tuple[Fraction, RegularityReport]]:
    """Tension family at omega = i/steps, i = 0..steps, with full reports."""
    arity = bounded_int(m, "m", 2, M_MAX)
    count = bounded_int(steps, "steps", 2, 512)
    rows = []
    for i in range(count + 1):
        w = Fraction(i, count)
        rows.append((w, exact_regularity(schemes.make_tension(arity, w))))
    return rows
