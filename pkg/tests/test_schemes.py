"""Scheme constructors, their cross-family identities, and mask analysis."""

from fractions import Fraction

import pytest

from pseudospline.laurent import LaurentPoly
from pseudospline.schemes import (
    ParameterError,
    analyze,
    check_convergence,
    make_bspline,
    make_dd_dual,
    make_dd_dual_conjecture,
    make_dd_primal,
    make_interpolatory_lian,
    make_pseudo_spline,
    make_tension,
    recentered,
    reproduction_system,
    scheme_from_symbol,
    sigma,
)

B333 = LaurentPoly(["-4/3", "11/3", "-4/3"], offset=-1)


def test_sigma():
    assert sigma(2) == LaurentPoly(["1/2", "1/2"])
    assert sigma(3) == LaurentPoly(["1/3", "1/3", "1/3"])
    with pytest.raises(ParameterError):
        sigma(1)


def test_bspline_masks():
    spec = make_bspline(2, 1)
    assert spec.a == LaurentPoly(["1/2", "1", "1/2"])
    assert spec.b == LaurentPoly.one()
    assert (spec.r, spec.tau) == (1, 1)
    chaikin = make_bspline(2, 2)
    assert chaikin.a == LaurentPoly(["1/4", "3/4", "3/4", "1/4"])
    assert chaikin.tau == Fraction(3, 2)
    ternary = make_bspline(3, 1)
    assert ternary.a == LaurentPoly(["1/3", "2/3", "1", "2/3", "1/3"])
    assert ternary.tau == 2


def test_bspline_tau_closed_form():
    for m in range(2, 6):
        for n in range(0, 5):
            spec = make_bspline(m, n)
            assert spec.tau == Fraction((m - 1) * (n + 1), 2)
            assert spec.a.derivative_at_one(1) == m * spec.tau


def test_pseudo_333_factorization():
    spec = make_pseudo_spline(3, 3, 3)
    assert spec.b == B333
    assert spec.a == 3 * sigma(3) ** 4 * B333
    assert (spec.r, spec.n, spec.l, spec.tau) == (3, 3, 3, 4)


def test_pseudo_with_l1_is_the_bspline():
    for m in (2, 3, 4):
        for n in range(1, 6):
            assert make_pseudo_spline(m, n, 1).a == make_bspline(m, n).a


def test_pseudo_requires_odd_l():
    with pytest.raises(ParameterError, match="^l must be odd$"):
        make_pseudo_spline(2, 3, 4)


def test_dd_primal_four_point():
    spec = make_dd_primal(2, 1)
    sixteenth = [Fraction(c, 16) for c in (-1, 0, 9, 16, 9, 0, -1)]
    assert spec.a == LaurentPoly(sixteenth, offset=-3)
    assert spec.tau == 0
    assert spec.r == 3


def test_dd_primal_two_point_is_linear_interpolation():
    assert make_dd_primal(2, 0).a == LaurentPoly(["1/2", 1, "1/2"], offset=-1)
    assert make_dd_primal(3, 0).a == LaurentPoly(
        ["1/3", "2/3", 1, "2/3", "1/3"], offset=-2
    )


def test_interpolatory_masks_keep_old_points():
    for spec in (
        make_dd_primal(2, 1),
        make_dd_primal(3, 2),
        make_dd_primal(4, 1),
        make_interpolatory_lian(3, 1),
        make_interpolatory_lian(5, 2),
    ):
        support = spec.a.support()
        for j in range(support[0] // spec.m - 1, support[1] // spec.m + 2):
            assert spec.a.coeff(spec.m * j) == (1 if j == 0 else 0)
        assert spec.tau == 0


def test_dd_primal_matches_pseudo_diagonal():
    for m in (2, 3, 4):
        for lp in range(0, 3):
            dd = make_dd_primal(m, lp)
            ps = make_pseudo_spline(m, 2 * lp + 1, 2 * lp + 1)
            assert dd.a.equals_up_to_shift(ps.a)
            assert dd.r == ps.r


def test_lian_matches_pseudo_even_diagonal():
    for m in (3, 5):
        for lp in range(0, 3):
            li = make_interpolatory_lian(m, lp)
            ps = make_pseudo_spline(m, 2 * lp, 2 * lp + 1)
            assert li.a.equals_up_to_shift(ps.a)


def test_lian_requires_odd_arity():
    with pytest.raises(ParameterError, match="^arity must be odd$"):
        make_interpolatory_lian(4, 1)


def test_dd_dual_closed_product():
    expect = Fraction(-1, 16) * sigma(3) ** 4 * LaurentPoly([1, 1]) * LaurentPoly(
        [35, -94, 35]
    )
    assert make_dd_dual(3, 1).a.equals_up_to_shift(expect)


def test_dd_dual_symmetry_kinds():
    # the full symbol is always even symmetric; the derived symbol keeps the
    # half factor only when m is odd (for m = 2 it merges into sigma)
    for m in (2, 3):
        for lp in (0, 1, 2):
            spec = make_dd_dual(m, lp)
            assert spec.a.symmetry().kind == "even"
            expected = "even" if m % 2 else "odd"
            assert spec.b.symmetry().kind == expected


def test_dd_dual_conjecture_matches_lagrange_construction():
    for m in (2, 3):
        for lp in (1, 2):
            closed = make_dd_dual_conjecture(m, 2 * lp + 1)
            lagrange = make_dd_dual(m, lp)
            assert closed.a.equals_up_to_shift(lagrange.a)


def test_dd_dual_conjecture_requires_odd_n():
    with pytest.raises(ParameterError, match="^n must be odd$"):
        make_dd_dual_conjecture(2, 2)


def test_tension_endpoints():
    for m in (2, 3, 4, 5):
        flat = make_tension(m, 0)
        assert flat.b == LaurentPoly.one()
        assert flat.a == m * sigma(m) ** 2
        bent = make_tension(m, 1)
        assert bent.a.equals_up_to_shift(make_pseudo_spline(m, 3, 3).a)
        assert bent.r == 1  # stored factorization keeps the folded matrix 2x2


def test_tension_accepts_rational_strings():
    spec = make_tension(2, "1/3")
    assert spec.omega == Fraction(1, 3)
    assert spec.a == Fraction(2, 3) * make_tension(2, 0).a + Fraction(1, 3) * (
        make_tension(2, 1).a
    )


def test_tension_rejects_out_of_range():
    for bad in ("3/2", -1, 2):
        with pytest.raises(ParameterError, match=r"omega must lie in \[0, 1\]"):
            make_tension(2, bad)


def test_negative_parameters_rejected():
    with pytest.raises(ParameterError, match="lprime must be nonnegative"):
        make_dd_primal(2, -1)
    with pytest.raises(ParameterError, match="lprime must be nonnegative"):
        make_dd_dual(2, -1)
    with pytest.raises(ParameterError):
        make_bspline(2, -1)
    with pytest.raises(ParameterError):
        make_pseudo_spline(2, -1, 1)


# -- factorization and wrapping ----------------------------------------------


def test_scheme_from_symbol_roundtrip():
    for spec in (make_pseudo_spline(3, 3, 3), make_bspline(2, 3), make_dd_primal(2, 1)):
        wrapped = scheme_from_symbol(spec.a, spec.m)
        assert wrapped.b == spec.b
        assert wrapped.r == spec.r
        assert wrapped.tau == spec.tau


def test_scheme_from_symbol_rejects_nonconvergent():
    with pytest.raises(ParameterError):
        scheme_from_symbol(LaurentPoly([2]), 2)
    with pytest.raises(ParameterError):
        scheme_from_symbol(LaurentPoly([1, 1]), 3)  # sums per phase miss 1


def test_check_convergence_witness():
    cert = check_convergence(LaurentPoly([1, 0, 1]), 2)
    assert not cert.passes
    assert cert.witness == 0
    good = check_convergence(make_pseudo_spline(4, 3, 3).a, 4)
    assert good.passes and good.witness is None


def test_largest_sigma_power_is_stripped():
    for m in (2, 3):
        for n in (1, 2, 3, 4):
            for l in (1, 3):
                if l > n:
                    continue
                spec = make_pseudo_spline(m, n, l)
                s = sigma(m)
                assert spec.a.divide_exact(s ** (spec.r + 1)) is not None
                assert spec.a.divide_exact(s ** (spec.r + 2)) is None


# -- analysis ----------------------------------------------------------------


def test_analyze_reports_generation_and_reproduction():
    for m in (2, 3, 4):
        for n in range(1, 7):
            for l in (1, 3, 5):
                if l > n:
                    continue
                spec = make_pseudo_spline(m, n, l)
                report = analyze(spec.a, m)
                assert report.generation_degree == spec.r
                assert report.reproduction_degree == l
                assert report.tau == spec.tau
                assert report.convergence.passes


def test_analyze_shift_law():
    spec = make_pseudo_spline(2, 3, 3)
    for k in (-2, 1, 5):
        assert analyze(spec.a.shifted(k), 2).tau == spec.tau + k


def test_analyze_width_and_symmetry():
    spec = make_pseudo_spline(3, 2, 3)
    report = analyze(spec.a, 3)
    assert report.support == (-1, 7)
    assert report.phi_width == 4
    assert report.symmetry == ("odd", 3)


def test_analyze_nonconvergent_mask():
    report = analyze(LaurentPoly([1, 0, 1]), 2)
    assert report.generation_degree == -1
    assert report.reproduction_degree == -1
    assert analyze(LaurentPoly.zero(), 2).support is None


def test_derived_symbol_is_centred_and_flat():
    # odd symmetry about 0 forces b'(1) = 0
    for spec in (
        make_pseudo_spline(2, 4, 3),
        make_pseudo_spline(3, 5, 5),
        make_tension(4, "2/5"),
    ):
        b = recentered(spec.b)
        assert b.symmetry() == ("odd", 0)
        assert b.derivative_at_one(1) == 0


# -- the reproduction system -------------------------------------------------


def test_reproduction_system_matrix():
    rs = reproduction_system(3, 3, 3, 4)
    expect = (
        (3, 0, 0, 0),
        (12, 3, 0, 0),
        (44, 24, 3, 0),
        (144, 132, 36, 3),
    )
    assert rs.matrix == tuple(tuple(Fraction(x) for x in row) for row in expect)


def test_reproduction_system_rhs_is_falling_factorial():
    rs = reproduction_system(3, 3, 3, 4)
    assert rs.rhs == (3, 12, 36, 72)  # 3 * 4^(k) falling


def test_reproduction_system_at_zero_shift():
    rs = reproduction_system(3, 3, 3, 0)
    assert rs.d == (1, -4, Fraction(52, 3), -80)


def test_reproduction_system_matches_constructed_symbol():
    spec = make_pseudo_spline(3, 3, 3)
    rs = reproduction_system(3, 3, 3, spec.tau)
    for k in range(4):
        assert rs.d[k] == spec.b.derivative_at_one(k)


def test_reproduction_system_tracks_any_shift():
    # solving at the analyzed tau always reproduces the stored b-derivatives
    for m, n, l in ((2, 3, 3), (2, 5, 5), (4, 3, 3)):
        spec = make_pseudo_spline(m, n, l)
        rs = reproduction_system(m, n, l, spec.tau)
        for k in range(l + 1):
            assert rs.d[k] == spec.b.derivative_at_one(k)


def test_reproduction_system_rejects_negative_degree():
    with pytest.raises(ParameterError):
        reproduction_system(2, 1, -1, 0)
