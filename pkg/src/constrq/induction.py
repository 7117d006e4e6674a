"""Rieffel induction at finite dimension.

A Hilbert module L over a finite C*-algebra (a direct sum of matrix blocks)
together with a representation of the algebra yields the sesquilinear form

    (psi ⊗ v, phi ⊗ w)_0 = v^dagger pi(<psi, phi>) w

on L ⊗ H_rho.  Its Gram matrix is positive semi-definite; quotienting the
null space and completing gives the induced ("physical") Hilbert space.  The
quotient is realized numerically by a spectral cutoff: eigenvalues below
null_tol times the largest are null, and V = Sigma^{1/2} W^dagger on the kept
eigenspace satisfies (V Psi, V Phi) = (Psi, Phi)_0 literally.  Operators that
are symmetric for the form descend through V; the descended operator is the
least-squares solution of pi(A) V = V (A ⊗ I), and the residual of that
equation doubles as the well-definedness certificate.

For a finite gauge group the form becomes the group average
(1/|G|) sum_x U(x) ⊗ U_rho(x), and the module route through the group
algebra must reproduce it; both paths are exposed so tests can compare them.

Inner products are antilinear in the first slot throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation
from .groups import FiniteGroup, SubgroupEmbedding, UnitaryRep, invariant_dim_oracle, quotient_group
from .linalg import operator_norm

NULL_TOL = 1e-10
PSD_TOL = 1e-9
WEAK_TOL = 1e-9


@dataclass(frozen=True)
class FiniteCStarAlgebra:
    """Direct sum of full matrix blocks; elements are one matrix per block."""

    block_dims: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.block_dims)
        if not dims or any(d < 1 for d in dims):
            raise InvariantViolation("block dims must be a nonempty list of positive integers")
        object.__setattr__(self, "block_dims", dims)

    def element(self, blocks) -> "AlgebraElement":
        return AlgebraElement(self, blocks)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, [np.zeros((d, d), dtype=complex) for d in self.block_dims])

    def unit(self) -> "AlgebraElement":
        return AlgebraElement(self, [np.eye(d, dtype=complex) for d in self.block_dims])


class AlgebraElement:
    def __init__(self, algebra: FiniteCStarAlgebra, blocks):
        blocks = [np.asarray(b, dtype=complex) for b in blocks]
        if len(blocks) != len(algebra.block_dims):
            raise InvariantViolation("wrong number of blocks")
        for b, d in zip(blocks, algebra.block_dims):
            if b.shape != (d, d):
                raise InvariantViolation("block shape mismatch")
        self.algebra = algebra
        self.blocks = blocks

    def __add__(self, other):
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __mul__(self, other):
        if np.isscalar(other):
            return AlgebraElement(self.algebra, [b * other for b in self.blocks])
        return AlgebraElement(self.algebra, [a @ b for a, b in zip(self.blocks, other.blocks)])

    __rmul__ = __mul__

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [b.conj().T for b in self.blocks])

    def norm(self) -> float:
        return max(operator_norm(b) for b in self.blocks)

    def min_eig(self) -> float:
        """Smallest eigenvalue across blocks of the Hermitian part."""
        vals = []
        for b in self.blocks:
            h = (b + b.conj().T) / 2.0
            vals.append(float(np.linalg.eigvalsh(h)[0]))
        return min(vals)


class AlgebraRepresentation:
    """A *-representation of a block algebra, stored on matrix units.

    ``unit_images[k][p, q]`` is the operator representing the matrix unit
    E^{pq} of block k, so pi(B) = sum_k sum_{pq} B_k[p,q] unit_images[k][p,q].
    Multiplicativity and the star property are verified exhaustively on the
    matrix units.
    """

    def __init__(self, algebra: FiniteCStarAlgebra, unit_images, tol: float = 1e-10, validate: bool = True):
        imgs = [np.asarray(u, dtype=complex) for u in unit_images]
        if len(imgs) != len(algebra.block_dims):
            raise InvariantViolation("need unit images for every block")
        dim = imgs[0].shape[2]
        for u, d in zip(imgs, algebra.block_dims):
            if u.shape != (d, d, dim, dim):
                raise InvariantViolation("unit image tensor has the wrong shape")
        self.algebra = algebra
        self.unit_images = imgs
        self.dim = dim
        if validate:
            self._validate(tol)

    @classmethod
    def from_multiplicities(cls, algebra: FiniteCStarAlgebra, mults) -> "AlgebraRepresentation":
        """Canonical form: block k acts as A_k ⊗ I_{m_k} on ⊕_k C^{d_k m_k}."""
        mults = [int(m) for m in mults]
        if len(mults) != len(algebra.block_dims) or any(m < 0 for m in mults):
            raise InvariantViolation("need a nonnegative multiplicity per block")
        dim = sum(d * m for d, m in zip(algebra.block_dims, mults))
        if dim == 0:
            raise InvariantViolation("representation space must be nonzero")
        imgs = []
        offset = 0
        for d, m in zip(algebra.block_dims, mults):
            u = np.zeros((d, d, dim, dim), dtype=complex)
            for p in range(d):
                for q in range(d):
                    for r in range(m):
                        u[p, q, offset + p * m + r, offset + q * m + r] = 1.0
            imgs.append(u)
            offset += d * m
        return cls(algebra, imgs)

    def apply(self, element: AlgebraElement) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for u, b in zip(self.unit_images, element.blocks):
            out += np.tensordot(b, u, axes=([0, 1], [0, 1]))
        return out

    def _validate(self, tol: float):
        for k, (u, d) in enumerate(zip(self.unit_images, self.algebra.block_dims)):
            for p in range(d):
                for q in range(d):
                    if np.linalg.norm(u[p, q].conj().T - u[q, p]) > tol:
                        raise InvariantViolation(f"block {k}: star property fails on matrix units")
                    for r in range(d):
                        for s in range(d):
                            prod = u[p, q] @ u[r, s]
                            expect = u[p, s] if q == r else 0.0
                            if np.linalg.norm(prod - expect) > tol:
                                raise InvariantViolation(
                                    f"block {k}: matrix-unit multiplication fails"
                                )
        # cross-block products must vanish
        for k1, u1 in enumerate(self.unit_images):
            for k2, u2 in enumerate(self.unit_images):
                if k1 == k2:
                    continue
                if np.linalg.norm(np.tensordot(u1[0, 0], u2[0, 0], axes=([1], [0]))) > tol:
                    raise InvariantViolation("representations of distinct blocks must be orthogonal")


class HilbertModule:
    """A finite-dimensional Hilbert C*-module.

    The inner product is stored as one tensor per block,
    ``ip[k][i, j]`` = block k of <e_i, e_j> (antilinear in i); the right
    action as ``action[k][p, q]`` = the operator on L by which the matrix
    unit E^{pq} of block k acts.
    """

    def __init__(self, algebra: FiniteCStarAlgebra, ip_tensors, action_tensors, tol: float = 1e-9):
        ips = [np.asarray(t, dtype=complex) for t in ip_tensors]
        acts = [np.asarray(t, dtype=complex) for t in action_tensors]
        if len(ips) != len(algebra.block_dims) or len(acts) != len(algebra.block_dims):
            raise InvariantViolation("need one ip tensor and one action tensor per block")
        n = ips[0].shape[0]
        for t, d in zip(ips, algebra.block_dims):
            if t.shape != (n, n, d, d):
                raise InvariantViolation("ip tensor has the wrong shape")
        for t, d in zip(acts, algebra.block_dims):
            if t.shape != (d, d, n, n):
                raise InvariantViolation("action tensor has the wrong shape")
        self.algebra = algebra
        self.ip_tensors = ips
        self.action_tensors = acts
        self.dim = n
        self._validate(tol)

    def ip(self, psi, phi) -> AlgebraElement:
        """<psi, phi> in the algebra; antilinear in psi."""
        psi = np.asarray(psi, dtype=complex)
        phi = np.asarray(phi, dtype=complex)
        blocks = [np.einsum("i,j,ijpq->pq", psi.conj(), phi, t) for t in self.ip_tensors]
        return AlgebraElement(self.algebra, blocks)

    def act(self, psi, element: AlgebraElement) -> np.ndarray:
        """Right action psi · B."""
        psi = np.asarray(psi, dtype=complex)
        out = np.zeros(self.dim, dtype=complex)
        for t, b in zip(self.action_tensors, element.blocks):
            op = np.tensordot(b, t, axes=([0, 1], [0, 1]))
            out += op @ psi
        return out

    def _validate(self, tol: float, n_samples: int = 24):
        # hermitian symmetry <psi,phi>^* = <phi,psi> holds exactly on the tensor
        for t in self.ip_tensors:
            if np.max(np.abs(np.conj(np.transpose(t, (1, 0, 3, 2))) - t)) > tol:
                raise InvariantViolation("module inner product is not hermitian-symmetric")
        rng = np.random.default_rng(7)
        scale = max(np.max(np.abs(t)) for t in self.ip_tensors)
        scale = max(scale, 1e-30)
        for _ in range(n_samples):
            psi = rng.normal(size=self.dim) + 1j * rng.normal(size=self.dim)
            phi = rng.normal(size=self.dim) + 1j * rng.normal(size=self.dim)
            b = AlgebraElement(
                self.algebra,
                [
                    rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
                    for d in self.algebra.block_dims
                ],
            )
            # positivity (sampled): <psi,psi> >= 0 spectrally
            if self.ip(psi, psi).min_eig() < -1e-9 * scale * (psi @ psi.conj()).real:
                raise InvariantViolation("module inner product is not positive")
            # equivariance <phi, psi·B> = <phi,psi> B
            lhs = self.ip(phi, self.act(psi, b))
            rhs = self.ip(phi, psi) * b
            err = max(
                np.max(np.abs(l - r)) for l, r in zip(lhs.blocks, rhs.blocks)
            )
            mag = scale * float(np.linalg.norm(psi) * np.linalg.norm(phi)) * b.norm()
            if err > 1e-10 * max(1.0, mag):
                raise InvariantViolation("right action is not equivariant for the inner product")

    @classmethod
    def standard_free(cls, algebra: FiniteCStarAlgebra, n: int) -> "HilbertModule":
        """L = C^n over C (each basis vector orthonormal, scalar action).

        Only sensible for the one-block, one-dimensional algebra; used by the
        trivial examples.
        """
        if algebra.block_dims != (1,):
            raise InvariantViolation("standard_free expects the scalar algebra")
        ip = np.eye(n, dtype=complex).reshape(n, n, 1, 1)
        act = np.eye(n, dtype=complex).reshape(1, 1, n, n)
        return cls(algebra, [ip], [act])


def zero_form_gram(module: HilbertModule, rho: AlgebraRepresentation) -> np.ndarray:
    """Gram matrix of (·,·)_0 on L ⊗ H_rho in the product basis.

    Index order: row (i, a) = i * dim_rho + a.  Entry
    G[(i,a),(j,b)] = [pi(<e_i, e_j>)]_{a,b}.
    """
    if module.algebra is not rho.algebra and module.algebra.block_dims != rho.algebra.block_dims:
        raise InvariantViolation("module and representation must share the algebra")
    n, d = module.dim, rho.dim
    G = np.zeros((n * d, n * d), dtype=complex)
    for t, u in zip(module.ip_tensors, rho.unit_images):
        # G[(i,a),(j,b)] += sum_pq t[i,j,p,q] u[p,q,a,b]
        G += np.tensordot(t, u, axes=([2, 3], [0, 1])).transpose(0, 2, 1, 3).reshape(n * d, n * d)
    G = (G + G.conj().T) / 2.0
    return G


def is_weak_observable_q(a, gram, tol: float = WEAK_TOL) -> bool:
    """Symmetry of A for the induced form: ||A^dagger G - G A|| small.

    ``a`` must already act on the full tensor product (same size as the
    Gram); lift module operators with np.kron(A, eye) first.
    """
    a = np.asarray(a, dtype=complex)
    G = np.asarray(gram, dtype=complex)
    if a.shape != G.shape:
        raise InvariantViolation("operator and Gram matrix sizes differ")
    scale = operator_norm(G) * operator_norm(a)
    if scale == 0.0:
        return True
    return operator_norm(a.conj().T @ G - G @ a) <= tol * scale


@dataclass
class InductionResult:
    """Output of the null-space quotient.

    ``vmap`` has shape (induced_dim, big_dim) and satisfies
    (V Psi)^dagger (V Phi) = Psi^dagger G Phi up to the dropped spectrum.
    """

    gram: np.ndarray
    eigenvalues: np.ndarray
    kept_eigenvalues: np.ndarray
    vmap: np.ndarray
    induced_dim: int
    induced_operators: list
    operator_residuals: list

    def induce_operator(self, a, tol: float = WEAK_TOL) -> tuple[np.ndarray, float]:
        """Descend an operator on the big space through V; returns (matrix, residual)."""
        a = np.asarray(a, dtype=complex)
        if not is_weak_observable_q(a, self.gram, tol):
            raise InvariantViolation(
                "operator is not symmetric for the induced form (not a weak observable)"
            )
        if self.induced_dim == 0:
            return np.zeros((0, 0), dtype=complex), 0.0
        target = self.vmap @ a
        pinv = np.linalg.pinv(self.vmap)
        induced = target @ pinv
        residual = operator_norm(induced @ self.vmap - target)
        denom = max(1.0, operator_norm(a) * operator_norm(self.vmap))
        if residual > 1e-9 * denom:
            raise InvariantViolation(
                f"descended operator fails pi(A) V = V A (residual {residual:.3e}); "
                "operator does not preserve the null space"
            )
        return induced, float(residual)


def induce_from_gram(
    gram,
    weak_ops=(),
    null_tol: float = NULL_TOL,
    psd_tol: float = PSD_TOL,
    zero_floor: float = 1e-12,
) -> InductionResult:
    """Null-space quotient of a positive semi-definite Gram matrix.

    Eigenvalues below ``null_tol`` times the largest are null.  A Gram whose
    largest eigenvalue is below ``zero_floor`` is treated as identically zero
    (averages of nontrivial irreps produce pure float noise at ~1e-16).
    """
    G = np.asarray(gram, dtype=complex)
    G = (G + G.conj().T) / 2.0
    evals, evecs = np.linalg.eigh(G)
    lam_max = float(evals[-1]) if evals.size else 0.0
    if lam_max < 0:
        lam_max = 0.0
    if evals.size and evals[0] < -max(psd_tol * lam_max, zero_floor):
        raise InvariantViolation(
            f"Gram matrix is not positive semi-definite (min eig {evals[0]:.3e}); "
            "projective multiplier or invalid module"
        )
    keep = evals > null_tol * lam_max if lam_max > zero_floor else np.zeros(evals.shape, dtype=bool)
    kept = evals[keep]
    W = evecs[:, keep]
    vmap = np.sqrt(kept)[:, None] * W.conj().T
    result = InductionResult(
        gram=G,
        eigenvalues=evals,
        kept_eigenvalues=kept,
        vmap=vmap,
        induced_dim=int(kept.size),
        induced_operators=[],
        operator_residuals=[],
    )
    for a in weak_ops:
        op, res = result.induce_operator(a)
        result.induced_operators.append(op)
        result.operator_residuals.append(res)
    return result


def induce(
    module: HilbertModule,
    rho: AlgebraRepresentation,
    weak_ops=(),
    null_tol: float = NULL_TOL,
    psd_tol: float = PSD_TOL,
) -> InductionResult:
    """Full induction from a Hilbert module and an algebra representation.

    ``weak_ops`` are operators on L; they are lifted to L ⊗ H_rho as A ⊗ I.
    """
    G = zero_form_gram(module, rho)
    lifted = [np.kron(np.asarray(a, dtype=complex), np.eye(rho.dim)) for a in weak_ops]
    return induce_from_gram(G, lifted, null_tol, psd_tol)


# ---------------------------------------------------------------------------
# the group-averaged specialization
# ---------------------------------------------------------------------------


def group_average_gram(u: UnitaryRep, u_rho: UnitaryRep) -> np.ndarray:
    """(1/|G|) sum_x U(x) ⊗ U_rho(x); the Gram of the zero form for gauge groups."""
    if u.group is not u_rho.group and not np.array_equal(u.group.table, u_rho.group.table):
        raise InvariantViolation("representations must share the group")
    big = np.einsum("xij,xab->xiajb", u.matrices, u_rho.matrices).reshape(
        u.group.order, u.dim * u_rho.dim, u.dim * u_rho.dim
    )
    G = big.mean(axis=0)
    return (G + G.conj().T) / 2.0


def group_average_induction(
    u: UnitaryRep,
    u_rho: UnitaryRep,
    weak_ops=(),
    null_tol: float = NULL_TOL,
) -> InductionResult:
    """Induction with the group-averaged form; weak_ops act on the U-space."""
    G = group_average_gram(u, u_rho)
    if operator_norm(G @ G - G) > 1e-8 * max(1.0, operator_norm(G)):
        raise InvariantViolation(
            "group average is not a projector; U is not a genuine representation"
        )
    lifted = [np.kron(np.asarray(a, dtype=complex), np.eye(u_rho.dim)) for a in weak_ops]
    return induce_from_gram(G, lifted, null_tol)


def group_algebra(group: FiniteGroup, irreps) -> tuple[FiniteCStarAlgebra, list]:
    """C*(G) as the block algebra of a complete irrep list.

    Returns the algebra and the irrep list (order fixed).  The Fourier
    transform with normalized Haar measure identifies functions on G with
    block tuples; completeness (sum d_k^2 = |G|) is enforced.
    """
    irreps = list(irreps)
    if sum(r.dim**2 for r in irreps) != group.order:
        raise InvariantViolation("irrep list is not complete for the group")
    return FiniteCStarAlgebra(tuple(r.dim for r in irreps)), irreps


def function_to_element(algebra: FiniteCStarAlgebra, irreps, values) -> AlgebraElement:
    """Fourier transform: f -> (1/|G|) sum_x f(x) rho_k(x) per block."""
    values = np.asarray(values, dtype=complex)
    order = irreps[0].group.order
    blocks = [
        np.tensordot(values, r.matrices, axes=(0, 0)) / order for r in irreps
    ]
    return AlgebraElement(algebra, blocks)


def group_module(u: UnitaryRep, irreps) -> tuple[HilbertModule, FiniteCStarAlgebra]:
    """The module route for the group-averaged form.

    L = H_U over C*(G) with <psi, phi>(x) = psi^dagger U(x) phi and right
    action psi·f = (1/|G|) sum_x f(x) U(x^{-1}) psi.  Returns the module and
    the algebra; pair with ``rep_from_unitary`` to get pi_rho for a given
    unitary representation.
    """
    G = u.group
    algebra, irreps = group_algebra(G, irreps)
    n = u.dim
    ip_tensors = []
    action_tensors = []
    inv_mats = u.matrices[G.inverse]
    for r in irreps:
        d = r.dim
        # ip[k][i,j,p,q] = (1/|G|) sum_x U(x)[i,j] * rho_k(x)[p,q]
        t = np.einsum("xij,xpq->ijpq", u.matrices, r.matrices) / G.order
        ip_tensors.append(t)
        # matrix unit E^{pq} of block k corresponds to the function
        # f(x) = d_k * conj(rho_k(x)[p,q]); its right action is
        # (1/|G|) sum_x f(x) U(x^{-1})
        a = np.einsum("xpq,xij->pqij", r.matrices.conj(), inv_mats) * (d / G.order)
        action_tensors.append(a)
    module = HilbertModule(algebra, ip_tensors, action_tensors)
    return module, algebra


def rep_from_unitary(algebra: FiniteCStarAlgebra, irreps, u_rho: UnitaryRep) -> AlgebraRepresentation:
    """pi_rho on matrix units: pi(E_k^{pq}) = (d_k/|G|) sum_x conj(rho_k(x)[p,q]) U_rho(x)."""
    order = u_rho.group.order
    imgs = []
    for r in irreps:
        d = r.dim
        img = np.einsum("xpq,xab->pqab", r.matrices.conj(), u_rho.matrices) * (d / order)
        imgs.append(img)
    return AlgebraRepresentation(algebra, imgs)


def character_multiplicity_oracle(u: UnitaryRep, u_rho: UnitaryRep) -> int:
    """Induced dimension predicted by characters: <chi_U * chi_rho, 1>."""
    return invariant_dim_oracle(u, u_rho)


# ---------------------------------------------------------------------------
# induction in stages
# ---------------------------------------------------------------------------


@dataclass
class StagedInductionResult:
    stage1: InductionResult
    stage2: InductionResult
    direct: InductionResult
    residual_rep: UnitaryRep
    staged_dim: int
    direct_dim: int
    spectra_staged: list
    spectra_direct: list

    @property
    def dims_equal(self) -> bool:
        return self.staged_dim == self.direct_dim

    def max_spectrum_gap(self) -> float:
        gaps = [0.0]
        for s, d in zip(self.spectra_staged, self.spectra_direct):
            if len(s) != len(d):
                return float("inf")
            if len(s):
                gaps.append(float(np.max(np.abs(np.sort(s) - np.sort(d)))))
        return max(gaps)


def induction_in_stages(
    u: UnitaryRep,
    emb: SubgroupEmbedding,
    theta: UnitaryRep,
    weak_ops=(),
    null_tol: float = NULL_TOL,
) -> StagedInductionResult:
    """Induce from U_theta = theta ∘ tau in stages and directly, with certificates.

    Stage 1 induces from the trivial representation of the normal subgroup;
    the quotient group acts on the stage-1 space through V_1 (well-defined
    because conjugation permutes the subgroup), and stage 2 induces from the
    character theta of the quotient.  The direct path uses theta ∘ tau on the
    whole group.  Unitary equivalence is certified by equal dimensions and
    equal spectra of every descended test observable.
    """
    G = emb.ambient
    if not np.array_equal(u.group.table, G.table):
        raise InvariantViolation("representation and embedding must share the ambient group")
    quotient, tau = quotient_group(emb)
    if theta.dim != 1 or not np.array_equal(theta.group.table, quotient.table):
        raise InvariantViolation("theta must be a character of the quotient group")

    # stage 1: trivial induction over the subgroup image
    sub_mats = u.matrices[emb.inclusion]
    P0 = sub_mats.mean(axis=0)
    P0 = (P0 + P0.conj().T) / 2.0
    stage1 = induce_from_gram(P0, [np.asarray(a, dtype=complex) for a in weak_ops], null_tol)
    V1 = stage1.vmap
    V1p = np.linalg.pinv(V1)

    # residual action of the quotient on the stage-1 space
    reps_of_cosets = [None] * quotient.order
    for g in G.elements():
        c = int(tau[g])
        if reps_of_cosets[c] is None:
            reps_of_cosets[c] = g
    res_mats = np.stack([V1 @ u.matrices[g] @ V1p for g in reps_of_cosets])
    try:
        residual_rep = UnitaryRep(quotient, res_mats)
    except InvariantViolation as exc:
        raise InvariantViolation(f"residual quotient action is ill-defined: {exc}") from exc
    # well-definedness across coset representatives
    for g in G.elements():
        c = int(tau[g])
        if np.linalg.norm(V1 @ u.matrices[g] @ V1p - res_mats[c]) > 1e-9 * max(1.0, u.dim):
            raise InvariantViolation("residual action depends on the coset representative")

    # stage 2: induce the residual rep from theta
    theta_vals = theta.matrices[:, 0, 0]
    gram2 = np.tensordot(theta_vals, res_mats, axes=(0, 0)) / quotient.order
    gram2 = (gram2 + gram2.conj().T) / 2.0
    staged_ops = stage1.induced_operators
    stage2 = induce_from_gram(gram2, staged_ops, null_tol)

    # direct: U_theta = theta ∘ tau
    direct_vals = theta_vals[tau]
    gram_d = np.tensordot(direct_vals, u.matrices, axes=(0, 0)) / G.order
    gram_d = (gram_d + gram_d.conj().T) / 2.0
    direct = induce_from_gram(gram_d, [np.asarray(a, dtype=complex) for a in weak_ops], null_tol)

    spectra_staged = [np.linalg.eigvalsh((m + m.conj().T) / 2.0) for m in stage2.induced_operators]
    spectra_direct = [np.linalg.eigvalsh((m + m.conj().T) / 2.0) for m in direct.induced_operators]
    return StagedInductionResult(
        stage1=stage1,
        stage2=stage2,
        direct=direct,
        residual_rep=residual_rep,
        staged_dim=stage2.induced_dim,
        direct_dim=direct.induced_dim,
        spectra_staged=spectra_staged,
        spectra_direct=spectra_direct,
    )
