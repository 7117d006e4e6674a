import numpy as np
import pytest

from constrq.errors import InvariantViolation
from constrq.linalg import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    associator_defect,
    derivation_defect,
    hermitian_eigensystem,
    jb_inequality_defect,
    jordan,
    lie_bracket,
    operator_norm,
    random_hermitian,
    require_hermitian,
)

RNG = np.random.default_rng(42)


class TestJordan:
    def test_identity_is_unit(self):
        b = random_hermitian(4, RNG)
        assert np.allclose(jordan(np.eye(4), b), b)

    def test_square(self):
        a = random_hermitian(3, RNG)
        assert np.allclose(jordan(a, a), a @ a)

    def test_sigma_z_sigma_x_anticommute(self):
        assert np.allclose(jordan(SIGMA_Z, SIGMA_X), np.zeros((2, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(InvariantViolation, match="dimension mismatch"):
            jordan(np.eye(2), np.eye(3))


class TestLieBracket:
    def test_antisymmetry_on_equal_args(self):
        a = random_hermitian(4, RNG)
        assert operator_norm(lie_bracket(a, a, 1.0)) < 1e-12

    def test_pauli_half_spins(self):
        out = lie_bracket(SIGMA_X / 2, SIGMA_Y / 2, 1.0)
        assert np.allclose(out, -SIGMA_Z / 2)

    def test_identity_is_central(self):
        b = random_hermitian(5, RNG)
        assert operator_norm(lie_bracket(np.eye(5), b, 0.3)) < 1e-12

    def test_result_hermitian(self):
        a, b = random_hermitian(4, RNG), random_hermitian(4, RNG)
        out = lie_bracket(a, b, 0.7)
        assert operator_norm(out - out.conj().T) < 1e-12

    def test_hbar_must_be_positive(self):
        a = random_hermitian(2, RNG)
        with pytest.raises(InvariantViolation, match="hbar"):
            lie_bracket(a, a, 0.0)


class TestAssociator:
    def test_diagonal_triple_commutative(self):
        a, b, c = np.diag([1.0, 2.0]), np.diag([3.0, -1.0]), np.diag([0.5, 4.0])
        assert associator_defect(a, b, c, 1.0) < 1e-14

    def test_random_triple(self):
        a, b, c = (random_hermitian(5, RNG) for _ in range(3))
        scale = max(1.0, operator_norm(a) * operator_norm(b) * operator_norm(c))
        assert associator_defect(a, b, c, 0.7) <= 1e-10 * scale

    def test_pauli_exact(self):
        assert associator_defect(SIGMA_X, SIGMA_Y, SIGMA_Z, 2.0) <= 1e-12

    @pytest.mark.parametrize("hbar", [0.1, 1.0, 2.0])
    @pytest.mark.parametrize("dim", [2, 3, 5, 8])
    def test_identity_holds_across_scales(self, dim, hbar):
        rng = np.random.default_rng(dim * 100 + int(hbar * 10))
        for _ in range(5):
            a, b, c = (random_hermitian(dim, rng) for _ in range(3))
            scale = max(1.0, operator_norm(a) * operator_norm(b) * operator_norm(c))
            assert associator_defect(a, b, c, hbar) <= 1e-10 * scale

    def test_bracket_is_derivation_of_jordan(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            a, b, c = (random_hermitian(4, rng) for _ in range(3))
            scale = max(1.0, operator_norm(a) * operator_norm(b) * operator_norm(c))
            assert derivation_defect(a, b, c, 0.5) <= 1e-10 * scale


class TestJBInequality:
    def test_zero_second_argument(self):
        a = random_hermitian(4, RNG)
        assert abs(jb_inequality_defect(a, np.zeros((4, 4)))) < 1e-10

    def test_pauli_pair(self):
        # sigma_z^2 + sigma_x^2 = 2I, so defect = 2 - 1 = 1
        assert abs(jb_inequality_defect(SIGMA_Z, SIGMA_X) - 1.0) < 1e-12

    def test_nonnegative_on_random_pairs(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            a, b = random_hermitian(5, rng), random_hermitian(5, rng)
            scale = max(1.0, operator_norm(a) ** 2 + operator_norm(b) ** 2)
            assert jb_inequality_defect(a, b) >= -1e-10 * scale


class TestOperatorNorm:
    def test_identity(self):
        assert operator_norm(np.eye(7)) == pytest.approx(1.0, abs=1e-12)

    def test_diagonal(self):
        assert operator_norm(np.diag([3.0, -5.0])) == pytest.approx(5.0, abs=1e-12)

    def test_sigma_x(self):
        assert operator_norm(SIGMA_X) == pytest.approx(1.0, abs=1e-12)

    def test_submultiplicative_and_cstar(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            n = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            assert operator_norm(m @ n) <= operator_norm(m) * operator_norm(n) + 1e-10
            lhs = operator_norm(m.conj().T @ m)
            assert abs(lhs - operator_norm(m) ** 2) <= 1e-10 * max(1.0, lhs)

    def test_rejects_nonfinite(self):
        with pytest.raises(InvariantViolation, match="non-finite"):
            operator_norm(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_require_hermitian_rejects_skewed():
    m = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(InvariantViolation, match="Hermitian"):
        require_hermitian(m)


def test_eigensystem_ascending():
    m = random_hermitian(6, np.random.default_rng(17))
    evals, vecs = hermitian_eigensystem(m)
    assert np.all(np.diff(evals) >= -1e-12)
    assert np.allclose(vecs @ np.diag(evals) @ vecs.conj().T, m)
