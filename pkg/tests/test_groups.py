import numpy as np
import pytest

from constrq.errors import InvariantViolation
from constrq.groups import (
    FiniteGroup,
    PermutationRep,
    UnitaryRep,
    average_projector,
    characters_of_abelian,
    conjugation_rep,
    conjugacy_classes,
    cyclic,
    dihedral,
    direct_product,
    electric_generating_set,
    group_preset,
    invariant_dim_oracle,
    irrep_catalog,
    named_irrep,
    projector_rank,
    quaternion,
    quotient_group,
    regular_rep,
    subgroup_embedding,
    symmetric,
    tensor_rep,
    trivial_rep,
)

PRESETS = ["Z4", "S3", "D4", "Q8"]


class TestFiniteGroup:
    def test_rejects_broken_table(self):
        with pytest.raises(InvariantViolation):
            FiniteGroup([[0, 1], [0, 1]])   # columns not permutations

    def test_rejects_nonassociative(self):
        # a Latin square with identity that is not a group (order 5 loop)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(InvariantViolation, match="associative"):
            FiniteGroup(table)

    @pytest.mark.parametrize("name,order", [("Z4", 4), ("S3", 6), ("D4", 8), ("Q8", 8)])
    def test_preset_orders(self, name, order):
        assert group_preset(name).order == order

    def test_quaternion_relations(self):
        q = quaternion()
        i, j, k = 2, 4, 6
        assert q.mult(i, j) == k
        assert q.mult(j, i) == 7       # -k
        assert q.mult(i, i) == 1       # -1
        assert q.element_order(i) == 4

    def test_direct_product(self):
        g = direct_product(cyclic(2), cyclic(3))
        assert g.order == 6
        assert g.is_abelian()

    def test_symmetric_is_nonabelian(self):
        assert not symmetric(3).is_abelian()


class TestConjugacyClasses:
    def test_abelian_all_singletons(self):
        cc = conjugacy_classes(cyclic(4))
        assert cc.count == 4

    def test_s3_three_classes(self):
        cc = conjugacy_classes(symmetric(3))
        assert cc.count == 3
        assert sorted(len(c) for c in cc.classes) == [1, 2, 3]

    def test_q8_five_classes(self):
        cc = conjugacy_classes(quaternion())
        assert cc.count == 5
        assert sorted(len(c) for c in cc.classes) == [1, 1, 2, 2, 2]

    def test_partition_is_conjugation_stable(self):
        g = dihedral(4)
        cc = conjugacy_classes(g)
        for x in g.elements():
            for h in g.elements():
                assert cc.class_of[g.conjugate(h, x)] == cc.class_of[x]

    @pytest.mark.parametrize("name", PRESETS)
    def test_class_count_equals_conjugation_invariants(self, name):
        # independent route: rank of the group average of the conjugation action
        g = group_preset(name)
        rank = projector_rank(conjugation_rep(g).average())
        assert rank == conjugacy_classes(g).count


class TestAverageProjector:
    def test_trivial_rep(self):
        p = average_projector(trivial_rep(symmetric(3)))
        assert np.allclose(p, np.ones((1, 1)))

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_regular_cyclic_projects_onto_constants(self, n):
        p = average_projector(regular_rep(cyclic(n)))
        assert projector_rank(p) == 1
        assert np.allclose(p, np.full((n, n), 1.0 / n))

    def test_s3_two_dim_irrep_averages_to_zero(self):
        p = average_projector(named_irrep(symmetric(3), "standard"))
        assert np.linalg.norm(p) < 1e-12

    def test_projector_identity_norm(self):
        p = average_projector(regular_rep(dihedral(4)))
        assert np.linalg.norm(p @ p - p) < 1e-10

    def test_rank_matches_rounded_trace(self):
        for name in PRESETS:
            g = group_preset(name)
            p = average_projector(regular_rep(g))
            assert projector_rank(p) == round(float(np.trace(p).real))


class TestTensorRep:
    def test_trivial_factor(self):
        g = symmetric(3)
        v = named_irrep(g, "standard")
        t = tensor_rep(trivial_rep(g), v)
        assert t.dim == 2
        assert np.allclose(t.matrices, v.matrices)

    def test_regular_z2_squared(self):
        r = regular_rep(cyclic(2))
        t = tensor_rep(r, r)
        assert projector_rank(average_projector(t)) == 2

    def test_s3_standard_squared(self):
        v = named_irrep(symmetric(3), "standard")
        t = tensor_rep(v, v)
        assert projector_rank(average_projector(t)) == 1

    def test_group_mismatch(self):
        with pytest.raises(InvariantViolation, match="same group"):
            tensor_rep(trivial_rep(cyclic(2)), trivial_rep(cyclic(3)))


class TestQuotients:
    def test_z2_in_z4(self):
        q, tau = quotient_group(subgroup_embedding(cyclic(4), [2]))
        assert q.order == 2
        assert tau[0] == tau[2] and tau[1] == tau[3]

    def test_z3_in_s3(self):
        g = symmetric(3)
        three_cycle = next(x for x in g.elements() if g.element_order(x) == 3)
        q, _ = quotient_group(subgroup_embedding(g, [three_cycle]))
        assert q.order == 2

    def test_rotations_in_d4(self):
        q, tau = quotient_group(subgroup_embedding(dihedral(4), [1]))
        assert q.order == 2
        g = dihedral(4)
        for x in g.elements():
            for y in g.elements():
                assert tau[g.mult(x, y)] == q.mult(int(tau[x]), int(tau[y]))

    def test_non_normal_rejected(self):
        g = symmetric(3)
        swap = next(x for x in g.elements() if g.element_order(x) == 2)
        with pytest.raises(InvariantViolation, match="normal"):
            quotient_group(subgroup_embedding(g, [swap]))


class TestAbelianCharacters:
    def test_z2(self):
        chars = characters_of_abelian(cyclic(2))
        vals = sorted(tuple(np.round(c.matrices[:, 0, 0].real, 9)) for c in chars)
        assert vals == [(1.0, -1.0), (1.0, 1.0)]

    def test_z3_roots_of_unity(self):
        chars = characters_of_abelian(cyclic(3))
        omega = np.exp(2j * np.pi / 3)
        got = {tuple(np.round(c.matrices[:, 0, 0], 9)) for c in chars}
        expect = {
            tuple(np.round([1, 1, 1], 9)),
            tuple(np.round([1, omega, omega**2], 9)),
            tuple(np.round([1, omega**2, omega], 9)),
        }
        assert got == expect

    def test_klein_four_signs(self):
        g = direct_product(cyclic(2), cyclic(2))
        chars = characters_of_abelian(g)
        assert len(chars) == 4
        for c in chars:
            assert np.allclose(np.abs(c.matrices[:, 0, 0].imag), 0.0, atol=1e-10)

    @pytest.mark.parametrize("name", ["Z2", "Z5", "Z2xZ3", "Z2xZ2"])
    def test_orthonormality(self, name):
        g = group_preset(name)
        chars = characters_of_abelian(g)
        assert len(chars) == g.order
        vals = np.array([c.matrices[:, 0, 0] for c in chars])
        gram = vals @ vals.conj().T / g.order
        assert np.max(np.abs(gram - np.eye(g.order))) < 1e-9

    def test_nonabelian_rejected(self):
        with pytest.raises(InvariantViolation, match="abelian"):
            characters_of_abelian(symmetric(3))


class TestUnitaryRep:
    def test_rejects_non_representation(self):
        g = cyclic(2)
        bad = np.stack([np.eye(2, dtype=complex), np.diag([1.0, 1.0j])])
        with pytest.raises(InvariantViolation):
            UnitaryRep(g, bad)

    def test_rejects_projective(self):
        # the Pauli assignment on Z2xZ2 is projective, not a rep
        g = direct_product(cyclic(2), cyclic(2))
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sz = np.diag([1.0, -1.0]).astype(complex)
        mats = np.stack([np.eye(2, dtype=complex), sz, sx, sx @ sz])
        with pytest.raises(InvariantViolation, match="projective|representation"):
            UnitaryRep(g, mats)

    @pytest.mark.parametrize("name", PRESETS)
    def test_irrep_catalog_complete_and_orthonormal(self, name):
        g = group_preset(name)
        reps = irrep_catalog(g)
        assert sum(r.dim**2 for r in reps) == g.order
        chars = np.array([r.character() for r in reps])
        gram = chars @ chars.conj().T / g.order
        assert np.max(np.abs(gram - np.eye(len(reps)))) < 1e-9

    @pytest.mark.parametrize("name", PRESETS)
    def test_regular_rep_contains_each_irrep_dim_times(self, name):
        g = group_preset(name)
        reg = regular_rep(g)
        for rho in irrep_catalog(g):
            # multiplicity of the conjugate of rho in the regular rep = dim rho
            assert invariant_dim_oracle(reg, rho) == rho.dim


class TestPermutationRep:
    def test_composition_checked_exactly(self):
        g = cyclic(3)
        perms = np.stack([np.roll(np.arange(3), k) for k in range(3)])
        # rolling by k sends i -> i+k which matches the regular action
        rep = PermutationRep(g, perms)
        assert projector_rank(rep.average()) == 1

    def test_bad_composition_rejected(self):
        g = cyclic(3)
        perms = np.stack([np.arange(3), np.arange(3), np.roll(np.arange(3), 1)])
        with pytest.raises(InvariantViolation):
            PermutationRep(g, perms)


@pytest.mark.parametrize("name", PRESETS)
def test_electric_generating_sets(name):
    g = group_preset(name)
    gens = electric_generating_set(g)
    cc = conjugacy_classes(g)
    # symmetric
    assert all(g.inv(s) in gens for s in gens)
    # conjugation-closed
    for s in gens:
        for h in g.elements():
            assert g.conjugate(h, s) in gens
    # generating
    closure = {g.identity}
    frontier = set(gens) | closure
    while frontier != closure:
        closure = frontier
        frontier = closure | {g.mult(a, b) for a in closure for b in closure}
    assert len(closure) == g.order
