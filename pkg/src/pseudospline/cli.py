"""Command-line front end: symbols, regularity reports, tables, and sweeps.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
JSON goes to stdout in the documented schemas and re-serializes
byte-identically; displayed regularities are rounded half-even to five
decimals, matching the printed tables.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterator, Optional

from . import regularity as regmod
from . import schemes, serialize, subdivision
from .genfun import taylor_g
from .laurent import LaurentPoly, format_rational
from .regularity import exact_regularity
from .schemes import ParameterError, SchemeSpec, recentered
from .serialize import build_scheme, display_regularity, dumps_canonical


def _scheme_from_args(args) -> SchemeSpec:
    """Map positional family parameters onto the shared grammar."""
    family = args.family
    omega = getattr(args, "omega", None)
    if family not in serialize.FAMILY_USAGE:
        return build_scheme(family, args.m)
    params = list(args.params)
    take = lambda: params.pop(0) if params else None
    kw = {}
    if family == "pseudo":
        kw["n"], kw["l"] = take(), take()
    elif family in ("bspline", "dd-dual-conjecture"):
        kw["n"] = take()
    elif family in ("dd-primal", "dd-dual", "lian"):
        kw["lprime"] = take()
    else:
        kw["omega"] = omega if omega is not None else take()
    if params:
        raise ParameterError(f"unexpected extra parameters: {' '.join(params)}")
    if omega is not None and family != "tension":
        raise ParameterError("--omega applies to the tension family only")
    return build_scheme(family, args.m, **kw)


def _scheme_text(spec: SchemeSpec) -> str:
    head = f"family {spec.family}  m {spec.m}"
    if spec.n is not None:
        head += f"  n {spec.n}"
    if spec.l is not None:
        head += f"  l {spec.l}"
    if spec.omega is not None:
        head += f"  omega {format_rational(spec.omega)}"
    lo, hi = subdivision.support_interval(spec)
    lines = [
        head,
        f"tau {format_rational(spec.tau)}  r {spec.r}"
        f"  support [{format_rational(lo)}, {format_rational(hi)}]",
        f"a (offset {spec.a.offset}): "
        + " ".join(format_rational(c) for c in spec.a.coeffs),
        f"b (offset {spec.b.offset}): "
        + " ".join(format_rational(c) for c in spec.b.coeffs),
    ]
    return "\n".join(lines)


def cmd_symbol(args) -> int:
    spec = _scheme_from_args(args)
    if args.format == "text":
        print(_scheme_text(spec))
    else:
        print(dumps_canonical(serialize.scheme_to_json(spec)))
    return 0


def cmd_regularity(args) -> int:
    report = exact_regularity(_scheme_from_args(args))
    if args.format == "text":
        kind = "exact" if report.exact else "lower bound"
        if math.isnan(report.regularity):
            kind = "no bound (indefinite transform)"
        print(f"{display_regularity(report)} ({kind})")
    else:
        print(dumps_canonical(serialize.regularity_to_json(report)))
    return 0


def _table_cells(n_max: int, lprime_max: int) -> list[tuple[int, int]]:
    return [
        (n, lp)
        for n in range(1, n_max + 1)
        for lp in range(0, lprime_max + 1)
        if 2 * lp + 1 <= n
    ]


def cmd_table(args) -> int:
    m = serialize.bounded_int(args.m, "m", 2, serialize.M_MAX)
    n_max = serialize.bounded_int(args.n_max, "n_max", 1, serialize.N_MAX)
    lprime_max = serialize.bounded_int(args.lprime_max, "lprime_max", 0, 5)
    cells = _table_cells(n_max, lprime_max)

    def value(cell: tuple[int, int]) -> float:
        n, lp = cell
        return exact_regularity(schemes.make_pseudo_spline(m, n, 2 * lp + 1)).regularity

    # map() keeps input order, so concurrent evaluation stays deterministic
    with ThreadPoolExecutor() as pool:
        values = dict(zip(cells, pool.map(value, cells)))

    if args.format == "csv":
        print("m,n,lprime,regularity")
        for (n, lp), v in values.items():
            print(f"{m},{n},{lp},{v:.5f}")
        return 0
    width = 10
    header = f"m = {m}".ljust(8) + "".join(
        f"l' = {lp}".rjust(width) for lp in range(lprime_max + 1)
    )
    print(header)
    for n in range(1, n_max + 1):
        row = f"n = {n}".ljust(8)
        for lp in range(lprime_max + 1):
            cell = values.get((n, lp))
            row += (f"{cell:.5f}" if cell is not None else "").rjust(width)
        print(row.rstrip())
    return 0


def cmd_sample(args) -> int:
    spec = _scheme_from_args(args)
    samples = subdivision.cardinal_samples(spec, args.levels)
    lines = ["t,value"]
    lines += [f"{float(t):.17g},{float(v):.17g}" for t, v in samples]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_sweep_tension(args) -> int:
    rows = serialize.sweep_tension(args.m, args.steps)
    print("omega,rho,regularity")
    for omega, report in rows:
        rho = serialize.rho_value(report)
        print(f"{float(omega):.17g},{rho:.17g},{report.regularity:.17g}")
    return 0


def cmd_dd_curve(args) -> int:
    m = serialize.bounded_int(args.m, "m", 2, 7)
    lprime_max = serialize.bounded_int(args.lprime_max, "lprime_max", 0, 30)

    def value(lp: int) -> float:
        return exact_regularity(schemes.make_dd_primal(m, lp)).regularity

    with ThreadPoolExecutor() as pool:
        values = list(pool.map(value, range(lprime_max + 1)))
    print("lprime,regularity")
    for lp, v in enumerate(values):
        print(f"{lp},{v:.17g}")
    return 0


# -- verification suites -----------------------------------------------------

Check = tuple[str, Optional[str]]


def _table3_specs(lprime_min: int = 0) -> Iterator[SchemeSpec]:
    for m in (2, 3, 4):
        for n in range(1, 8):
            for lp in range(lprime_min, 4):
                if 2 * lp + 1 <= n:
                    yield schemes.make_pseudo_spline(m, n, 2 * lp + 1)


def _check_affine_reproduction(spec: SchemeSpec, levels: int = 2) -> Optional[str]:
    """Refine exact samples of 3t - 2 and compare on the covered interior."""
    alpha, beta = Fraction(3), Fraction(-2)
    window = 30
    lo_a, hi_a = spec.a.support()
    data = LaurentPoly(
        [alpha * j + beta for j in range(-window, window + 1)], offset=-window
    )
    state = subdivision.SubdivisionState(spec, 0, data)
    valid_lo, valid_hi = -window, window
    for _ in range(levels):
        state = state.refined()
        valid_lo, valid_hi = spec.m * valid_lo + hi_a, spec.m * valid_hi + lo_a
    for j in range(valid_lo, valid_hi + 1):
        expect = alpha * state.t_of(j) + beta
        if state.data.coeff(j) != expect:
            return f"index {j}: got {state.data.coeff(j)}, want {expect}"
    return None


def _suite_reproduction() -> Iterator[Check]:
    for m in (2, 3, 4):
        for n in range(1, 6):
            for l in (1, 3):
                if l > n:
                    continue
                spec = schemes.make_pseudo_spline(m, n, l)
                cert = schemes.check_convergence(spec.a, m)
                yield (
                    f"phase sums pseudo({m},{n},{l})",
                    None if cert.passes else f"residue {cert.witness} sums != 1",
                )
                yield (
                    f"affine reproduction pseudo({m},{n},{l})",
                    _check_affine_reproduction(spec),
                )


def _suite_positivity() -> Iterator[Check]:
    for m in range(2, 8):
        bad = next(
            (
                (n, lp, k, g)
                for n in range(0, 9)
                for lp in range(0, 9)
                for k, g in enumerate(taylor_g(m, n, lp, "primal").g)
                if g <= 0
            ),
            None,
        )
        yield (
            f"series coefficients positive, m={m}, n<=8, l'<=8",
            None if bad is None else f"g_{bad[2]} = {bad[3]} at (n={bad[0]}, l'={bad[1]})",
        )
    for spec in _table3_specs():
        cert = regmod.certify_positivity(recentered(spec.b))
        if cert.status != regmod.STRICT:
            yield (
                f"strict transform pseudo({spec.m},{spec.n},{spec.l})",
                f"certificate says {cert.status}",
            )
            return
    yield "strict transforms on the whole printed-table grid", None
    for m in range(2, 6):
        for k in range(0, 9):
            cert = regmod.certify_positivity(
                recentered(schemes.make_tension(m, Fraction(k, 8)).b)
            )
            if cert.status == regmod.INDEFINITE:
                yield (
                    f"tension convexity m={m}",
                    f"omega={k}/8 certificate indefinite",
                )
                return
        yield f"tension blends never indefinite, m={m}", None


def _suite_rioul() -> Iterator[Check]:
    for spec in _table3_specs(lprime_min=1):
        b = recentered(spec.b)
        for level in range(1, 5):
            mask = regmod.full_iterated_mask(b, spec.m, level)
            center = mask.coeff(0)
            peak = max(abs(c) for c in mask.coeffs)
            if peak != center:
                yield (
                    f"center dominance pseudo({spec.m},{spec.n},{spec.l})",
                    f"level {level}: max {peak} vs center {center}",
                )
                return
    yield "iterated masks peak at the center, levels 1-4", None


def _suite_oracle() -> Iterator[Check]:
    for spec in _table3_specs(lprime_min=1):
        name = f"pseudo({spec.m},{spec.n},{spec.l})"
        fold = regmod.folded_matrix(recentered(spec.b), spec.m)
        sr = regmod.spectral_radius(fold)
        mid = (sr.lo + sr.hi) / 2
        window = regmod.iterate_window(fold, 64)[-1].window[0]
        est = float(window) ** (1 / 64) if window > 0 else float("nan")
        if not math.isfinite(est) or abs(est - float(mid)) > 0.02 * float(mid):
            yield f"window limit {name}", f"estimate {est} vs rho {float(mid)}"
            return
        rows = regmod.unfolded_matrix(recentered(spec.b), spec.m)
        sru = regmod.spectral_radius(rows)
        if sru.lo > sr.hi or sr.lo > sru.hi:
            yield (
                f"folded vs unfolded {name}",
                f"enclosures [{sr.lo},{sr.hi}] and [{sru.lo},{sru.hi}] disjoint",
            )
            return
    yield "window iteration at level 64 within 2% of rho", None
    yield "folded and unfolded matrices agree on rho", None


def _suite_dd_equivalence() -> Iterator[Check]:
    for m in (2, 3, 4):
        for lp in range(0, 3):
            dd = schemes.make_dd_primal(m, lp)
            ps = schemes.make_pseudo_spline(m, 2 * lp + 1, 2 * lp + 1)
            yield (
                f"dd-primal({m},{lp}) is pseudo({m},{2 * lp + 1},{2 * lp + 1})",
                None
                if dd.a.equals_up_to_shift(ps.a)
                else f"masks differ: {dd.a} vs {ps.a}",
            )
    for m in (3, 5):
        for lp in range(0, 3):
            li = schemes.make_interpolatory_lian(m, lp)
            ps = schemes.make_pseudo_spline(m, 2 * lp, 2 * lp + 1)
            yield (
                f"lian({m},{lp}) is pseudo({m},{2 * lp},{2 * lp + 1})",
                None
                if li.a.equals_up_to_shift(ps.a)
                else f"masks differ: {li.a} vs {ps.a}",
            )


def _suite_dual_conjecture() -> Iterator[Check]:
    for m in (2, 3):
        for lp in (1, 2):
            closed = schemes.make_dd_dual_conjecture(m, 2 * lp + 1)
            lagrange = schemes.make_dd_dual(m, lp)
            yield (
                f"closed form matches dual {2 * lp + 2}-point, m={m}",
                None
                if closed.a.equals_up_to_shift(lagrange.a)
                else f"masks differ: {closed.a} vs {lagrange.a}",
            )


def _suite_lp1() -> Iterator[Check]:
    for m in range(2, 8):
        for n in range(2, 12):
            spec = schemes.make_pseudo_spline(m, n, 3)
            # n - log_m(b0) = n - 2 - log_m(1/m^2 + (n+1)/12 (1 - 1/m^2))
            want_b0 = m * m * (
                Fraction(1, m * m) + Fraction(n + 1, 12) * (1 - Fraction(1, m * m))
            )
            b0 = recentered(spec.b).coeff(0)
            if b0 != want_b0:
                yield f"central coefficient m={m}, n={n}", f"{b0} != {want_b0}"
                return
            report = exact_regularity(spec)
            closed = n - math.log(float(want_b0), m)
            if abs(report.regularity - closed) > 1e-10:
                yield (
                    f"closed form m={m}, n={n}",
                    f"{report.regularity} vs {closed}",
                )
                return
            if n == 11 and report.regularity != 9.0:
                yield f"constancy at n=11, m={m}", f"got {report.regularity}"
                return
    yield "central coefficient matches the closed form, m=2..7, n=2..11", None
    yield "regularity matches n - 2 - log_m(...) to 1e-10", None
    yield "regularity is exactly 9 at n = 11 for every m", None


SUITES = {
    "reproduction": _suite_reproduction,
    "positivity": _suite_positivity,
    "rioul": _suite_rioul,
    "oracle": _suite_oracle,
    "dd-equivalence": _suite_dd_equivalence,
    "dual-conjecture": _suite_dual_conjecture,
    "lp1": _suite_lp1,
}


def cmd_verify(args) -> int:
    passed = 0
    for label, failure in SUITES[args.suite]():
        if failure is None:
            print(f"ok   {label}")
            passed += 1
        else:
            print(f"FAIL {label}: {failure}")
            return 1
    print(f"{args.suite}: {passed} checks passed")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# -- argument wiring ---------------------------------------------------------


def _add_scheme_arguments(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("family", help=", ".join(sorted(serialize.FAMILY_USAGE)))
    sp.add_argument("m", help="arity, 2..9")
    sp.add_argument(
        "params",
        nargs="*",
        help="family parameters: n l (pseudo), n (bspline, dd-dual-conjecture), "
        "l' (dd-primal, dd-dual, lian), omega (tension)",
    )
    sp.add_argument("--omega", help="tension weight in [0, 1], e.g. 1/2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudospline",
        description="Symmetric m-ary subdivision symbols and exact regularity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("symbol", help="print a scheme document")
    _add_scheme_arguments(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(fn=cmd_symbol)

    sp = sub.add_parser("regularity", help="print a regularity report")
    _add_scheme_arguments(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(fn=cmd_regularity)

    sp = sub.add_parser("table", help="regularity table for one arity")
    sp.add_argument("m")
    sp.add_argument("n_max", nargs="?", default=7)
    sp.add_argument("lprime_max", nargs="?", default=3)
    sp.add_argument("--format", choices=("text", "csv"), default="text")
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("sample", help="CSV samples of the cardinal limit")
    _add_scheme_arguments(sp)
    sp.add_argument("--levels", type=int, default=6)
    sp.add_argument("--out", help="write CSV here instead of stdout")
    sp.set_defaults(fn=cmd_sample)

    sp = sub.add_parser("sweep-tension", help="CSV sweep of the tension family")
    sp.add_argument("m")
    sp.add_argument("--steps", type=int, default=64)
    sp.set_defaults(fn=cmd_sweep_tension)

    sp = sub.add_parser("dd-curve", help="regularity versus l' for primal DD")
    sp.add_argument("m")
    sp.add_argument("--lprime-max", type=int, default=10, dest="lprime_max")
    sp.set_defaults(fn=cmd_dd_curve)

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("serve", help="run the JSON HTTP service")
    sp.add_argument("--port", type=int, default=8787)
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--static", help="also serve this directory at /")
    sp.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
