import math

import numpy as np
import pytest

import majorep as mj
from oracles import coherent_norm_quadrature


class TestCoherentOverlap:
    def test_polar_product_states(self):
        # coherent beta=pi is the all-|0> product state, beta=0 all-|1>
        s0 = mj.dicke_state(4, 0)
        assert abs(mj.coherent_overlap(s0, 0.3, math.pi)) == pytest.approx(1.0)
        s1 = mj.dicke_state(4, 4)
        assert abs(mj.coherent_overlap(s1, 0.0, 0.0)) == pytest.approx(1.0)

    def test_matches_product_expansion(self, rng):
        for _ in range(10):
            n = int(rng.integers(1, 9))
            alpha = rng.uniform(0, 2 * np.pi)
            beta = rng.uniform(0, np.pi)
            s = mj.random_symmetric_state(n, rng)
            q = np.array([math.sin(beta / 2) * np.exp(-1j * alpha), math.cos(beta / 2)])
            dense = q.copy()
            for _ in range(n - 1):
                dense = np.kron(dense, q)
            expected = np.vdot(dense, mj.expand_to_full(s).amp)
            assert mj.coherent_overlap(s, alpha, beta) == pytest.approx(expected, abs=1e-12)

    def test_ghz_landscape_closed_form(self):
        n = 5
        s = mj.ghz_state(n)
        for alpha in np.linspace(0, 2 * np.pi, 5):
            for beta in np.linspace(0.1, np.pi - 0.1, 5):
                c, d = math.cos(beta / 2), math.sin(beta / 2)
                expected = 0.5 * (
                    d ** (2 * n) + c ** (2 * n) + 2 * (c * d) ** n * math.cos(n * alpha)
                )
                got = abs(mj.coherent_overlap(s, alpha, beta)) ** 2
                assert got == pytest.approx(expected, abs=1e-12)

    def test_resolution_of_identity(self, rng):
        for n in (2, 4, 6):
            s = mj.random_symmetric_state(n, rng)

            def f(alpha, beta):
                return abs(mj.coherent_overlap(s, alpha, beta)) ** 2

            assert coherent_norm_quadrature(f, n) == pytest.approx(1.0, abs=1e-8)


class TestGeometricMeasure:
    def test_ghz_half(self):
        for n in range(2, 11):
            report = mj.geometric_measure(mj.ghz_state(n))
            assert report.eg == pytest.approx(0.5, abs=1e-6)
            assert report.log_eg == pytest.approx(1.0, abs=1e-6)
            betas = sorted(p.beta for p in report.cpps)
            if n == 2:
                # the two-qubit case degenerates to a great circle of optima
                # through both poles
                assert betas[0] <= 1e-4 and betas[-1] >= math.pi - 1e-4
            else:
                assert betas[0] == pytest.approx(0.0, abs=1e-6)
                assert betas[-1] == pytest.approx(math.pi, abs=1e-6)

    def test_w_state(self):
        report = mj.geometric_measure(mj.w_state(3))
        assert report.eg == pytest.approx(5 / 9, abs=1e-6)
        assert report.ring
        for p in report.cpps:
            assert math.tan(p.beta / 2) == pytest.approx(math.sqrt(2), abs=1e-5)

    def test_bell_state(self):
        report = mj.geometric_measure(mj.dicke_state(2, 1))
        assert report.eg == pytest.approx(0.5, abs=1e-6)
        assert report.ring
        assert report.cpps[0].beta == pytest.approx(math.pi / 2, abs=1e-6)

    def test_matches_closed_form_for_dicke(self):
        for n in range(2, 9):
            for l in range(n + 1):
                report = mj.geometric_measure(mj.dicke_state(n, l))
                eg_exact, cpp = mj.dicke_closed_form(n, l)
                assert report.eg == pytest.approx(eg_exact, abs=1e-6)
                if 0 < l < n:
                    assert any(
                        math.tan(p.beta / 2)
                        == pytest.approx(math.tan(cpp.beta / 2), abs=1e-5)
                        for p in report.cpps
                    )

    def test_product_state_measures_zero(self, rng):
        sp = mj.Spinor.from_angles(0.9, 2.1)
        s = mj.symmetrize([sp] * 4)
        report = mj.geometric_measure(s)
        assert report.eg <= 1e-9

    def test_entangled_state_positive(self, rng):
        s = mj.random_symmetric_state(5, rng)
        while mj.classify(s).diversity == 1:
            s = mj.random_symmetric_state(5, rng)
        assert mj.geometric_measure(s).eg > 1e-6

    def test_log_consistency(self, rng):
        s = mj.random_symmetric_state(6, rng)
        report = mj.geometric_measure(s)
        assert report.log_eg == pytest.approx(-math.log2(1 - report.eg), abs=1e-12)
        assert 0.0 <= report.eg < 1.0

    def test_rotation_invariance(self, rng):
        s = mj.random_symmetric_state(4, rng)
        base = mj.geometric_measure(s).eg
        for _ in range(5):
            u = mj.random_su2(rng)
            rotated = mj.geometric_measure(mj.su2_rotate(s, u)).eg
            assert rotated == pytest.approx(base, abs=1e-6)

    def test_single_qubit_is_unentangled(self, rng):
        s = mj.random_symmetric_state(1, rng)
        assert mj.geometric_measure(s).eg <= 1e-9

    def test_cpp_stationarity(self, rng):
        for seed in range(5):
            gen = np.random.default_rng(seed)
            s = mj.random_symmetric_state(int(gen.integers(2, 8)), gen)
            report = mj.geometric_measure(s)
            for p in report.cpps:
                grad = mj.overlap_gradient(s, p.alpha, p.beta)
                assert np.linalg.norm(grad) <= 1e-6

    def test_hierarchy_against_ghz(self):
        for n in range(3, 9):
            balanced = mj.geometric_measure(mj.dicke_state(n, n // 2)).eg
            assert balanced > 0.5


class TestClosedForm:
    def test_w_value(self):
        assert mj.dicke_closed_form(3, 1)[0] == pytest.approx(5 / 9)
        assert mj.dicke_closed_form(3, 2)[0] == pytest.approx(5 / 9)

    def test_four_two(self):
        assert mj.dicke_closed_form(4, 2)[0] == pytest.approx(1 - 6 / 16)

    def test_poles(self):
        eg0, cpp0 = mj.dicke_closed_form(5, 0)
        assert eg0 == pytest.approx(0.0)
        assert cpp0.beta == pytest.approx(math.pi)
        egn, cppn = mj.dicke_closed_form(5, 5)
        assert egn == pytest.approx(0.0)
        assert cppn.beta == pytest.approx(0.0)

    def test_optimum_angle(self):
        _, cpp = mj.dicke_closed_form(5, 2)
        assert math.tan(cpp.beta / 2) == pytest.approx(math.sqrt(3 / 2))


class TestCoherentPoint:
    def test_angle_normalization(self):
        p = mj.CoherentPoint(-1.0, 4.0)
        assert 0 <= p.alpha < 2 * math.pi
        assert 0 <= p.beta <= math.pi

    def test_pole_alpha_reset(self):
        assert mj.CoherentPoint(2.3, 0.0).alpha == 0.0
        assert mj.CoherentPoint(2.3, math.pi).alpha == 0.0

    def test_beta_reflection(self):
        p = mj.CoherentPoint(0.5, -0.7)
        assert p.beta == pytest.approx(0.7)
        assert p.alpha == pytest.approx((0.5 + math.pi) % (2 * math.pi))


class TestLandscape:
    def test_grid_shape_and_range(self, rng):
        s = mj.random_symmetric_state(4, rng)
        alphas = np.linspace(0, 2 * np.pi, 16, endpoint=False)
        betas = np.linspace(0, np.pi, 17)
        grid = mj.overlap_landscape(s, alphas, betas)
        assert grid.shape == (16, 17)
        assert np.all(grid >= 0.0)
        assert np.all(grid <= 1.0 + 1e-12)

    def test_report_can_carry_samples(self):
        report = mj.geometric_measure(mj.ghz_state(3), grid=16, keep_landscape=True)
        assert report.landscape_samples is not None
        assert report.landscape_samples.shape == (16, 16, 3)
