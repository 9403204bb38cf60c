import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from balloonstar import balloon
from balloonstar.balloon import (
    TIP,
    Region,
    boundary_curve,
    boundary_w,
    coeffs_from_b,
    coeffs_from_p,
    extremal,
    inverse_log_coefficients_series,
    kernel_eval,
    kernel_series,
    leftmost_point,
    log_coefficients_series,
    member_from_schwarz,
    membership,
    membership_value,
    starlikeness_probe,
)
from balloonstar.caratheodory import SchwarzParams, SchwarzPrefix, p_from_params, schur_prefix, schwarz_from_schur
from balloonstar.errors import OriginExcluded, SchwarzViolation
from balloonstar.series import PowerSeries

from conftest import random_disk


class TestKernel:
    def test_taylor_coefficients(self):
        k = kernel_series(4).series
        assert np.allclose(k.coeffs, [1, 1, 1 / 2, 1 / 3, 1 / 6])

    def test_series_matches_closed_form(self):
        k = kernel_series(40).series
        z = np.array([0.1, -0.2j, 0.15 + 0.1j])
        assert np.allclose(k(z), kernel_eval(z), atol=1e-14)

    def test_tip(self):
        assert kernel_eval(1.0) == pytest.approx(TIP)
        assert TIP == pytest.approx(3.2589, abs=1e-4)


class TestExtremals:
    @pytest.mark.parametrize(
        "label,expected",
        [
            ("f1", [1, 1, 3 / 4, 19 / 36, 101 / 288]),
            ("f2", [1, 0, 1 / 2, 0, 1 / 4, 0, 5 / 36]),
            ("f3", [1, 1j, -3 / 4, -19j / 36, 101 / 288]),
        ],
    )
    def test_coefficients(self, label, expected):
        f = extremal(label, 8).f
        assert np.allclose(f.coeffs[1 : len(expected) + 1], expected, atol=1e-12)

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            extremal("f4")

    def test_quotient_is_kernel_of_w(self):
        m = extremal("f1", 10)
        assert np.allclose(m.starlike_quotient().coeffs, kernel_series(9).series.coeffs, atol=1e-12)

    def test_identity_member(self):
        m = member_from_schwarz(PowerSeries.constant(0, 6), 6)
        assert np.allclose(m.f.coeffs, [0, 1, 0, 0, 0, 0, 0])


class TestCoefficientMaps:
    @given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1), st.floats(0, 6.3), st.floats(0, 6.3))
    def test_p_and_b_routes_agree_with_series(self, r1, r2, r3, t2, t3):
        z = (r1, r2 * np.exp(1j * t2), r3 * np.exp(1j * t3))
        m = member_from_schwarz(schwarz_from_schur(list(z) + [0.0], 6), 6)
        a_p = coeffs_from_p(p_from_params(SchwarzParams(*z)))[:3]
        b = schur_prefix(*z, 0.0)
        a_b = coeffs_from_b(SchwarzPrefix(*b))
        assert np.allclose(a_p, [m.a(2), m.a(3), m.a(4)], atol=1e-10)
        assert np.allclose(a_b, [m.a(2), m.a(3), m.a(4), m.a(5)], atol=1e-10)

    def test_b_route_validates(self):
        with pytest.raises(SchwarzViolation):
            coeffs_from_b(SchwarzPrefix(0.9, 0.5, 0))
        assert coeffs_from_b(SchwarzPrefix(0.9, 0.5, 0), check=False)[0] == 0.9

    def test_rotation(self):
        c = extremal("f1").coefficient_set().rotated(math.pi / 2)
        d = extremal("f3").coefficient_set()
        assert np.allclose([c.a2, c.a3, c.a4, c.a5], [d.a2, d.a3, d.a4, d.a5])

    def test_member_rejects_bad_schwarz(self):
        with pytest.raises(SchwarzViolation):
            member_from_schwarz(PowerSeries([0, 1, 1], 6), 6)
        with pytest.raises(SchwarzViolation):
            member_from_schwarz(PowerSeries([0.1, 0.5], 6), 6)


class TestLogCoefficients:
    def test_closed_forms_match_series(self, rng):
        for params in random_disk(rng, (25, 4)):
            m = member_from_schwarz(schwarz_from_schur(params, 6), 6)
            c = m.coefficient_set()
            assert np.allclose(log_coefficients_series(m.f), [c.gamma1, c.gamma2, c.gamma3], atol=1e-10)
            assert np.allclose(inverse_log_coefficients_series(m.f), [c.Gamma1, c.Gamma2, c.Gamma3], atol=1e-10)

    def test_known_inverse_log_example(self):
        g = inverse_log_coefficients_series(PowerSeries([0, 1, 1], 6))
        assert np.allclose(g, [-1 / 2, 3 / 4, -5 / 3])

    def test_extremal_values(self):
        c1 = extremal("f1").coefficient_set()
        c2 = extremal("f2").coefficient_set()
        assert np.allclose([c1.gamma1, c1.gamma2, c1.gamma3], [1 / 2, 1 / 8, 1 / 18])
        assert np.allclose([c2.gamma1, c2.gamma2, c2.gamma3], [0, 1 / 4, 0])


class TestGeometry:
    def test_boundary_residual(self):
        w = np.array([p.w for p in boundary_curve(1024)])
        assert np.max(np.abs(membership_value(w) - 1)) < 1e-10

    def test_conjugate_symmetry_is_exact(self):
        pts = boundary_curve(257)
        by_theta = {p.theta: p.w for p in pts}
        assert all(by_theta[-t] == np.conj(w) for t, w in by_theta.items())

    def test_membership(self):
        assert membership(1.0) is Region.INSIDE
        assert membership(boundary_w(0.7)) is Region.BOUNDARY
        assert membership(10.0) is Region.OUTSIDE
        assert membership(-0.1) is Region.OUTSIDE
        with pytest.raises(OriginExcluded):
            membership(0)

    def test_kernel_maps_disk_inside(self, rng):
        z = random_disk(rng, 500, 0.99)
        assert np.all(membership_value(kernel_eval(z)) < 1)

    def test_starlikeness(self):
        rep = starlikeness_probe(4096)
        assert rep.verdict is True and rep.min_increment > 0
        assert starlikeness_probe(8).verdict is None

    def test_real_part_positive_everywhere(self):
        theta = np.linspace(-np.pi + 1e-9, np.pi - 1e-9, 20001)
        assert np.all(boundary_w(theta).real > 0)

    def test_leftmost_report(self):
        rep = leftmost_point(4096)
        assert rep["w"].real > 0
        assert rep["deviation"] == pytest.approx(abs(rep["w"] - complex(-0.181, 0.678)))

    def test_cusp_circle(self):
        dev = balloon.cusp_circle_deviation(np.array([np.pi - 1e-2, np.pi - 1e-4]))
        assert dev[1] < dev[0] < 0.2

    def test_exports(self):
        pts = boundary_curve(4)
        assert balloon.boundary_csv(pts).splitlines()[0] == "theta,re_w,im_w"
        assert balloon.boundary_json(pts) == balloon.boundary_json(boundary_curve(4))
