import numpy as np
import pytest

from constrq.errors import InvariantViolation
from constrq.linalg import jordan, lie_bracket, operator_norm
from constrq.sphere import (
    CoherentState,
    PolynomialObservable,
    SpherePoint,
    SpinLevel,
    classical_limit_check,
    coherent_amplitudes,
    coherent_state,
    parse_polynomial,
    quantize,
    spin_matrices,
    sphere_sup_grid,
    strict_quantization_report,
    sup_abs,
    transition_closed_form,
    transition_probability,
)

NX = PolynomialObservable.coordinate(0)
NY = PolynomialObservable.coordinate(1)
NZ = PolynomialObservable.coordinate(2)


def random_poly(rng, n_terms=4, max_exp=2):
    terms = {}
    for _ in range(n_terms):
        key = tuple(int(v) for v in rng.integers(0, max_exp + 1, size=3))
        terms[key] = terms.get(key, 0.0) + float(rng.normal())
    return PolynomialObservable(terms)


class TestPolynomialAlgebra:
    def test_canonical_form_eliminates_nz_squared(self):
        p = PolynomialObservable({(0, 0, 2): 1.0})
        assert p.coefficients_close(
            PolynomialObservable({(0, 0, 0): 1.0, (2, 0, 0): -1.0, (0, 2, 0): -1.0})
        )

    def test_canonical_form_respects_sphere_values(self):
        rng = np.random.default_rng(0)
        raw = {(1, 1, 3): 2.0, (0, 2, 4): -1.5, (2, 0, 0): 0.5}
        p = PolynomialObservable(raw)
        assert all(k[2] <= 1 for k in p.terms)
        pts = sphere_sup_grid(21, 20)
        direct = np.zeros(len(pts))
        for (a, b, c), v in raw.items():
            direct += v * pts[:, 0] ** a * pts[:, 1] ** b * pts[:, 2] ** c
        assert np.max(np.abs(p.evaluate(pts) - direct)) < 1e-12

    def test_parser_round_trip(self):
        p = parse_polynomial("2.5*nx^2*nz - ny + 0.5")
        assert p.terms == {(2, 0, 1): 2.5, (0, 1, 0): -1.0, (0, 0, 0): 0.5}

    def test_parser_scientific_notation(self):
        p = parse_polynomial("1e-3*nx + 2E+1")
        assert p.terms == {(1, 0, 0): 1e-3, (0, 0, 0): 20.0}

    def test_parser_rejects_garbage(self):
        with pytest.raises(InvariantViolation):
            parse_polynomial("nx**2")

    def test_product_reduces(self):
        p = NZ * NZ
        assert all(k[2] <= 1 for k in p.terms)


class TestPoissonBracket:
    def test_generator_relations(self):
        assert NX.poisson_bracket(NY).coefficients_close(-1.0 * NZ)
        assert NY.poisson_bracket(NZ).coefficients_close(-1.0 * NX)
        assert NZ.poisson_bracket(NX).coefficients_close(-1.0 * NY)

    def test_antisymmetry_and_self(self):
        f = NX * NY + 2.0 * NZ
        assert f.poisson_bracket(f).is_zero(1e-14)
        g = NZ * NZ + NX
        lhs = f.poisson_bracket(g)
        rhs = -1.0 * g.poisson_bracket(f)
        assert lhs.coefficients_close(rhs, 1e-12)

    def test_nz_with_nx_squared(self):
        out = NZ.poisson_bracket(NX * NX)
        assert out.coefficients_close(-2.0 * NX * NY, 1e-14)

    def test_leibniz(self):
        rng = np.random.default_rng(1)
        for _ in range(5):
            f, g, h = (random_poly(rng) for _ in range(3))
            lhs = f.poisson_bracket(g * h)
            rhs = f.poisson_bracket(g) * h + g * f.poisson_bracket(h)
            assert lhs.coefficients_close(rhs, 1e-10)

    def test_jacobi_identity(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            f, g, h = (random_poly(rng) for _ in range(3))
            total = (
                f.poisson_bracket(g.poisson_bracket(h))
                + g.poisson_bracket(h.poisson_bracket(f))
                + h.poisson_bracket(f.poisson_bracket(g))
            )
            assert total.is_zero(1e-10)

    def test_against_finite_differences(self):
        # independent oracle: {f,g} = -eps_abc (d_a f)(d_b g) n_c with ambient
        # central differences on the canonical representatives
        rng = np.random.default_rng(3)
        f, g = random_poly(rng), random_poly(rng)
        bracket = f.poisson_bracket(g)
        eps = 1e-6
        for _ in range(20):
            v = rng.normal(size=3)
            n = v / np.linalg.norm(v)

            def grad(poly, point):
                out = np.zeros(3)
                for a in range(3):
                    dp = np.zeros(3)
                    dp[a] = eps
                    out[a] = (poly.evaluate(point + dp) - poly.evaluate(point - dp)) / (2 * eps)
                return out

            gf, gg = grad(f, n), grad(g, n)
            expected = -(np.cross(gf, gg) @ n)
            assert bracket.evaluate(n) == pytest.approx(expected, abs=1e-6)


class TestCoherentStates:
    def test_north_pole_highest_weight(self):
        state = coherent_state(SpinLevel(4), SpherePoint(0.0, 0.0))
        expect = np.zeros(5)
        expect[0] = 1.0
        assert np.allclose(state.amplitudes, expect)

    def test_south_pole_lowest_weight(self):
        state = coherent_state(SpinLevel(4), SpherePoint(np.pi, 0.3))
        assert abs(abs(state.amplitudes[-1]) - 1.0) < 1e-12
        assert np.linalg.norm(state.amplitudes[:-1]) < 1e-12

    def test_equator_spin_half(self):
        state = coherent_state(SpinLevel(1), SpherePoint(np.pi / 2, 0.0))
        assert np.allclose(state.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)])

    def test_unit_norm_everywhere(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            theta = np.arccos(rng.uniform(-1, 1))
            phi = rng.uniform(0, 2 * np.pi)
            amps = coherent_amplitudes(17, theta, phi)[0]
            assert np.linalg.norm(amps) == pytest.approx(1.0, abs=1e-12)

    def test_point_from_vector_normalizes_strictly(self):
        with pytest.raises(InvariantViolation):
            SpherePoint.from_vector([1.0, 0.0, 0.5])
        p = SpherePoint.from_vector([0.0, 1.0, 0.0])
        assert np.allclose(p.vector, [0.0, 1.0, 0.0], atol=1e-12)


class TestTransitionProbability:
    def test_identical_points(self):
        lvl = SpinLevel(6)
        s = coherent_state(lvl, SpherePoint(1.0, 2.0))
        assert transition_probability(s, s) == pytest.approx(1.0, abs=1e-12)

    def test_antipodal_orthogonal(self):
        lvl = SpinLevel(5)
        a = coherent_state(lvl, SpherePoint(0.0, 0.0))
        b = coherent_state(lvl, SpherePoint(np.pi, 0.0))
        assert transition_probability(a, b) < 1e-30

    def test_orthogonal_directions_two_j_four(self):
        lvl = SpinLevel(4)
        a = coherent_state(lvl, SpherePoint(0.0, 0.0))
        b = coherent_state(lvl, SpherePoint(np.pi / 2, 0.0))
        assert transition_probability(a, b) == pytest.approx(0.0625, abs=1e-12)

    def test_closed_form_and_symmetry(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            lvl = SpinLevel(int(rng.integers(1, 40)))
            p1 = SpherePoint(np.arccos(rng.uniform(-1, 1)), rng.uniform(0, 2 * np.pi))
            p2 = SpherePoint(np.arccos(rng.uniform(-1, 1)), rng.uniform(0, 2 * np.pi))
            s1, s2 = coherent_state(lvl, p1), coherent_state(lvl, p2)
            p12 = transition_probability(s1, s2)
            p21 = transition_probability(s2, s1)
            assert abs(p12 - p21) <= 1e-12
            assert p12 == pytest.approx(transition_closed_form(lvl, p1, p2), abs=1e-10)

    def test_level_mismatch(self):
        a = coherent_state(SpinLevel(2), SpherePoint(0.1, 0.0))
        b = coherent_state(SpinLevel(4), SpherePoint(0.1, 0.0))
        with pytest.raises(InvariantViolation, match="level"):
            transition_probability(a, b)


class TestQuantize:
    @pytest.mark.parametrize("two_j", [1, 2, 5, 8])
    def test_resolution_of_identity(self, two_j):
        q = quantize(SpinLevel(two_j), PolynomialObservable.constant(1.0))
        assert operator_norm(q - np.eye(two_j + 1)) < 1e-12

    def test_nz_spin_half(self):
        q = quantize(SpinLevel(1), NZ)
        assert np.allclose(q, np.diag([1.0 / 3.0, -1.0 / 3.0]), atol=1e-13)

    @pytest.mark.parametrize("two_j", [1, 2, 3, 4, 8])
    def test_linear_observables_are_scaled_spin_matrices(self, two_j):
        # independent oracle: exact spin matrices
        lvl = SpinLevel(two_j)
        jx, jy, jz = spin_matrices(two_j)
        scale = 1.0 / (lvl.j + 1.0)
        for poly, mat in [(NX, jx), (NY, jy), (NZ, jz)]:
            assert operator_norm(quantize(lvl, poly) - scale * mat) < 1e-12
        assert operator_norm(quantize(lvl, NZ)) == pytest.approx(
            lvl.j / (lvl.j + 1.0), abs=1e-12
        )

    def test_quadrature_order_stability(self):
        # orders N and N+8 agree to 1e-11 for degree <= 6
        rng = np.random.default_rng(6)
        lvl = SpinLevel(6)
        f = random_poly(rng, n_terms=5, max_exp=2) * random_poly(rng, n_terms=3, max_exp=1)
        assert f.degree() <= 6
        base_gl = lvl.two_j + 2 * f.degree() + 4
        base_phi = 2 * lvl.two_j + 4 * f.degree() + 5
        q1 = quantize(lvl, f, gl_order=base_gl, phi_points=base_phi)
        q2 = quantize(lvl, f, gl_order=base_gl + 8, phi_points=base_phi + 8)
        assert operator_norm(q1 - q2) < 1e-11

    def test_positivity_of_squares(self):
        rng = np.random.default_rng(7)
        grid = sphere_sup_grid()
        for _ in range(8):
            g = random_poly(rng, max_exp=1)
            f = g * g
            assert f.evaluate(grid).min() >= -1e-12
            q = quantize(SpinLevel(9), f)
            assert np.linalg.eigvalsh(q)[0] >= -1e-9

    def test_norm_bounded_by_sup(self):
        rng = np.random.default_rng(8)
        grid = sphere_sup_grid()
        for _ in range(8):
            f = random_poly(rng)
            q = quantize(SpinLevel(7), f)
            assert operator_norm(q) <= sup_abs(f, grid) + 1e-9


class TestStrictQuantizationReport:
    def test_constant_pair_all_zero(self):
        rows = strict_quantization_report(
            PolynomialObservable.constant(1.0), PolynomialObservable.constant(1.0), [2, 4]
        )
        for r in rows:
            assert r["dirac_defect"] < 1e-12
            assert r["jordan_defect"] < 1e-12
            assert r["norm_defect"] < 1e-12

    def test_dirac_decay_visible_for_nonlinear_pair(self):
        rows = strict_quantization_report(NX * NX, NY * NY, [4, 8, 16, 32, 40])
        dirac = [r["dirac_defect"] for r in rows]
        assert dirac[-1] < dirac[0]
        # O(hbar) rate: defect * (j+1) stays bounded (frozen margin from the
        # measured plateau ~0.28)
        for r in rows:
            assert r["dirac_defect"] * (r["two_j"] / 2 + 1) <= 0.5

    def test_dirac_exact_for_linear_generators(self):
        # commutators with Q(n_a) implement rotations exactly, so the Dirac
        # condition holds to machine precision for linear pairs
        rows = strict_quantization_report(NX, NY, [4, 16])
        for r in rows:
            assert r["dirac_defect"] < 1e-12

    def test_jordan_decay(self):
        rows = strict_quantization_report(NZ, NX * NX, [8, 16, 32])
        jd = [r["jordan_defect"] for r in rows]
        assert jd[0] > jd[1] > jd[2]
        # monotone within 10 percent for j >= 4
        assert all(jd[i + 1] <= 1.1 * jd[i] for i in range(len(jd) - 1))

    def test_norm_defect_of_nz(self):
        rows = strict_quantization_report(NZ, NX, [2, 4, 10])
        for r in rows:
            assert r["norm_defect"] == pytest.approx(
                1.0 / (r["two_j"] / 2.0 + 1.0), abs=1e-10
            )

    def test_empty_levels_rejected(self):
        with pytest.raises(InvariantViolation):
            strict_quantization_report(NX, NY, [])


class TestClassicalLimit:
    def test_right_angle_decay(self):
        pairs = [(SpherePoint(0.0, 0.0), SpherePoint(np.pi / 2, 0.0))]
        rows = classical_limit_check(pairs, [14])
        assert rows[0]["p"] == pytest.approx(2.0**-14, rel=1e-10)
        assert rows[0]["p"] < 0.01

    def test_monotone_decrease_for_distinct_points(self):
        pairs = [(SpherePoint(0.3, 0.1), SpherePoint(1.2, 2.0))]
        rows = classical_limit_check(pairs, [2, 4, 8, 16, 32])
        ps = [r["p"] for r in rows]
        assert all(ps[i + 1] < ps[i] for i in range(len(ps) - 1))

    def test_coincident_pair_stays_one(self):
        pt = SpherePoint(0.7, 0.4)
        rows = classical_limit_check([(pt, pt)], [1, 5, 30])
        for r in rows:
            assert r["p"] == pytest.approx(1.0, abs=1e-12)
