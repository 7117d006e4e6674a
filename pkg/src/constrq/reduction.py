"""Linear symplectic reduction and the lattice circle.

Generalized (fiber-product) reduction for linear symplectic data: the
constraint set C = {(x, y) : J(x) = J_rho(y)} is an affine subspace, the
induced presymplectic form is omega ⊕ (-omega_rho) restricted to C, and the
reduced space is the quotient by its radical.  Marsden-Weinstein reduction
is the special case where the second realization is a single point at level
zero.  Targets are abelian (all constraint components Poisson-commute), which
covers every worked example at this scale.

The second half of the module is the lattice shadow of Yang-Mills on a
circle: holonomy of a ring of group-valued links, and gauge equivalence of
configurations (which reduces exactly to conjugacy of holonomies).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvariantViolation
from .groups import FiniteGroup, conjugacy_classes

RADICAL_TOL = 1e-10


class SymplecticVectorSpace:
    """R^dim with a nondegenerate skew form; dim may be 0 for the point space."""

    def __init__(self, omega):
        w = np.asarray(omega, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise InvariantViolation("symplectic form must be a square matrix")
        n = w.shape[0]
        if n % 2 != 0:
            raise InvariantViolation("symplectic dimension must be even")
        if n > 0:
            if np.max(np.abs(w + w.T)) > 1e-12 * max(1.0, np.max(np.abs(w))):
                raise InvariantViolation("symplectic form must be skew-symmetric")
            sv = np.linalg.svd(w, compute_uv=False)
            if sv[-1] <= 1e-12 * sv[0]:
                raise InvariantViolation("symplectic form is degenerate")
        self.omega = w
        self.dim = n

    @property
    def poisson_tensor(self) -> np.ndarray:
        """Matrix Pi with {z_a, z_b} = Pi[a, b]; Pi = -omega^{-1}."""
        if self.dim == 0:
            return np.zeros((0, 0))
        return -np.linalg.inv(self.omega)

    @classmethod
    def standard(cls, n_pairs: int) -> "SymplecticVectorSpace":
        """T*R^n with coordinates (q_1..q_n, p_1..p_n) and {q_i, p_j} = delta_ij."""
        n = n_pairs
        w = np.zeros((2 * n, 2 * n))
        w[:n, n:] = np.eye(n)
        w[n:, :n] = -np.eye(n)
        return cls(w)

    @classmethod
    def point(cls) -> "SymplecticVectorSpace":
        return cls(np.zeros((0, 0)))


class LinearRealization:
    """Affine map J(z) = A z + b into R^k with Poisson-commuting components."""

    def __init__(self, space: SymplecticVectorSpace, matrix, offset=None):
        A = np.asarray(matrix, dtype=float)
        if A.ndim != 2 or A.shape[1] != space.dim:
            raise InvariantViolation(
                f"realization matrix must be k x {space.dim}, got {A.shape}"
            )
        b = np.zeros(A.shape[0]) if offset is None else np.asarray(offset, dtype=float)
        if b.shape != (A.shape[0],):
            raise InvariantViolation("offset length must match the number of components")
        if space.dim > 0 and A.size > 0:
            comm = A @ space.poisson_tensor @ A.T
            if np.max(np.abs(comm)) > 1e-10 * max(1.0, np.max(np.abs(A)) ** 2):
                raise InvariantViolation(
                    "realization components do not Poisson-commute (target must be abelian)"
                )
        self.space = space
        self.matrix = A
        self.offset = b
        self.target_dim = A.shape[0]

    @classmethod
    def translations(cls, n: int, k: int, level=None) -> "LinearRealization":
        """Momentum map of k coordinate translations on T*R^n: J = (p_1..p_k)."""
        if not 0 <= k <= n:
            raise InvariantViolation("need 0 <= k <= n")
        space = SymplecticVectorSpace.standard(n)
        A = np.zeros((k, 2 * n))
        A[:, n : n + k] = np.eye(k)
        b = None if level is None else -np.asarray(level, dtype=float)
        return cls(space, A, b)

    @classmethod
    def point_at_zero(cls, target_dim: int) -> "LinearRealization":
        """The realization of the one-point space {0} sitting at level 0."""
        return cls(SymplecticVectorSpace.point(), np.zeros((target_dim, 0)))


@dataclass
class AffineSubspace:
    """offset + span(columns of basis); basis columns orthonormal."""

    offset: np.ndarray
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def fiber_product(j: LinearRealization, j_rho: LinearRealization) -> AffineSubspace:
    """Solution set of J(x) = J_rho(y) inside S x S_rho.

    Raises if the affine system is inconsistent (no classical solutions).
    """
    if j.target_dim != j_rho.target_dim:
        raise InvariantViolation("realizations must share a target dimension")
    d1, d2 = j.space.dim, j_rho.space.dim
    M = np.hstack([j.matrix, -j_rho.matrix])
    rhs = j_rho.offset - j.offset
    if M.size == 0:
        if np.max(np.abs(rhs), initial=0.0) > 1e-10:
            raise InvariantViolation("affine constraint system is inconsistent (empty fiber product)")
        return AffineSubspace(np.zeros(d1 + d2), np.eye(d1 + d2))
    sol, _, _, _ = np.linalg.lstsq(M, rhs, rcond=None)
    if np.linalg.norm(M @ sol - rhs) > 1e-9 * (1.0 + np.linalg.norm(rhs)):
        raise InvariantViolation("affine constraint system is inconsistent (empty fiber product)")
    u, s, vt = np.linalg.svd(M)
    rank = int(np.count_nonzero(s > 1e-12 * (s[0] if s.size else 1.0)))
    null_basis = vt[rank:].T
    return AffineSubspace(sol, null_basis)


@dataclass
class ReducedSpace:
    """Quotient of the constraint set by the radical of the induced form.

    ``chart`` maps fiber-parameter coordinates t (columns of
    ``fiber.basis``) to quotient coordinates u = chart^T t; ``radical``
    spans the null directions in the same parameter coordinates.
    """

    fiber: AffineSubspace
    source_dim: int
    reduced_omega: np.ndarray
    chart: np.ndarray
    radical: np.ndarray
    quotient_dim: int

    @property
    def radical_basis(self) -> np.ndarray:
        """Radical directions expressed in the ambient product space."""
        return self.fiber.basis @ self.radical


def reduce(j: LinearRealization, j_rho: LinearRealization, radical_tol: float = RADICAL_TOL) -> ReducedSpace:
    """Generalized reduction: quotient the fiber product by the form's radical."""
    fiber = fiber_product(j, j_rho)
    d1, d2 = j.space.dim, j_rho.space.dim
    big = np.zeros((d1 + d2, d1 + d2))
    big[:d1, :d1] = j.space.omega
    big[d1:, d1:] = -j_rho.space.omega
    restricted = fiber.basis.T @ big @ fiber.basis
    restricted = (restricted - restricted.T) / 2.0
    m = restricted.shape[0]
    if m == 0:
        return ReducedSpace(fiber, d1, np.zeros((0, 0)), np.zeros((0, 0)), np.zeros((0, 0)), 0)
    u, s, vt = np.linalg.svd(restricted)
    smax = s[0] if s.size else 0.0
    # absolute floor tied to the ambient form: an entirely-noise restriction
    # (all directions radical) must not promote noise to symplectic content
    floor = 1e-12 * max(float(np.max(np.abs(big), initial=0.0)), 1e-300)
    cutoff = max(radical_tol * smax, floor)
    keep = s > cutoff
    chart = vt[keep].T
    radical = vt[~keep].T
    reduced_omega = chart.T @ restricted @ chart
    reduced_omega = (reduced_omega - reduced_omega.T) / 2.0
    qdim = chart.shape[1]
    if qdim % 2 != 0:
        raise InvariantViolation("reduced space has odd dimension; radical threshold split a pair")
    if qdim > 0:
        sv = np.linalg.svd(reduced_omega, compute_uv=False)
        if sv[-1] <= 1e-8 * sv[0]:
            raise InvariantViolation("reduced symplectic form is degenerate")
    return ReducedSpace(fiber, d1, reduced_omega, chart, radical, qdim)


def marsden_weinstein(j: LinearRealization, radical_tol: float = RADICAL_TOL) -> ReducedSpace:
    """J^{-1}(0)/G as reduction against the one-point realization at level 0."""
    return reduce(j, LinearRealization.point_at_zero(j.target_dim), radical_tol)


# ---------------------------------------------------------------------------
# observables
# ---------------------------------------------------------------------------


class QuadraticObservable:
    """f(z) = z^T Q z + l^T z + c with symmetric Q."""

    def __init__(self, quad=None, lin=None, const: float = 0.0, dim: int | None = None):
        if quad is None and lin is None and dim is None:
            raise InvariantViolation("specify at least one of quad, lin, dim")
        if quad is not None:
            Q = np.asarray(quad, dtype=float)
            dim = Q.shape[0]
        else:
            Q = np.zeros((dim if dim is not None else len(lin),) * 2)
            dim = Q.shape[0]
        if lin is None:
            l = np.zeros(dim)
        else:
            l = np.asarray(lin, dtype=float)
        if Q.shape != (dim, dim) or l.shape != (dim,):
            raise InvariantViolation("inconsistent observable shapes")
        if np.max(np.abs(Q - Q.T), initial=0.0) > 1e-10 * max(1.0, np.max(np.abs(Q), initial=0.0)):
            raise InvariantViolation("quadratic part must be symmetric")
        self.quad = (Q + Q.T) / 2.0
        self.lin = l
        self.const = float(const)
        self.dim = dim

    def evaluate(self, z) -> float:
        z = np.asarray(z, dtype=float)
        return float(z @ self.quad @ z + self.lin @ z + self.const)

    def bracket(self, other: "QuadraticObservable", space: SymplecticVectorSpace) -> "QuadraticObservable":
        """Poisson bracket {self, other}; closed on polynomials of degree <= 2."""
        if self.dim != other.dim or self.dim != space.dim:
            raise InvariantViolation("bracket operands must live on the given space")
        Pi = space.poisson_tensor
        Q1, l1 = self.quad, self.lin
        Q2, l2 = other.quad, other.lin
        cross = Q1 @ Pi @ Q2
        quad = 2.0 * (cross - cross.T)
        lin = 2.0 * (Q1 @ Pi @ l2) - 2.0 * (Q2 @ Pi @ l1)
        const = float(l1 @ Pi @ l2)
        return QuadraticObservable(quad, lin, const)

    def __repr__(self):
        return f"<QuadraticObservable dim={self.dim}>"


def constraint_zero_set(j: LinearRealization) -> AffineSubspace:
    """The affine set J^{-1}(0) in the source space."""
    A, b = j.matrix, j.offset
    if A.size == 0:
        if np.max(np.abs(b), initial=0.0) > 1e-10:
            raise InvariantViolation("zero level is not attained")
        return AffineSubspace(np.zeros(j.space.dim), np.eye(j.space.dim))
    sol, _, _, _ = np.linalg.lstsq(A, -b, rcond=None)
    if np.linalg.norm(A @ sol + b) > 1e-9 * (1.0 + np.linalg.norm(b)):
        raise InvariantViolation("zero level is not attained")
    u, s, vt = np.linalg.svd(A)
    rank = int(np.count_nonzero(s > 1e-12 * (s[0] if s.size else 1.0)))
    return AffineSubspace(sol, vt[rank:].T)


def is_weak_observable(
    f: QuadraticObservable,
    j: LinearRealization,
    constraint: AffineSubspace | None = None,
    tol: float = 1e-10,
) -> bool:
    """True iff {J_i, f} vanishes identically on the constraint set.

    The constraint set defaults to J^{-1}(0); symbolic substitution of the
    affine parametrization makes the check exact up to roundoff.
    """
    if constraint is None:
        constraint = constraint_zero_set(j)
    space = j.space
    scale = max(1.0, np.max(np.abs(f.quad), initial=0.0), np.max(np.abs(f.lin), initial=0.0))
    for i in range(j.target_dim):
        ji = QuadraticObservable(
            np.zeros((space.dim, space.dim)), j.matrix[i], float(j.offset[i])
        )
        br = ji.bracket(f, space)
        # affine restriction: value at offset and gradient along the basis
        val0 = br.evaluate(constraint.offset)
        grad = 2.0 * br.quad @ constraint.offset + br.lin
        along = constraint.basis.T @ grad
        quad_along = constraint.basis.T @ br.quad @ constraint.basis
        if (
            abs(val0) > tol * scale
            or np.max(np.abs(along), initial=0.0) > tol * scale
            or np.max(np.abs(quad_along), initial=0.0) > tol * scale
        ):
            return False
    return True


def induce_classical(
    f: QuadraticObservable, reduced: ReducedSpace, tol: float = 1e-10
) -> QuadraticObservable:
    """Push a weak observable down to quotient coordinates.

    Substitutes the affine parametrization of the constraint set and verifies
    that every term involving a radical direction vanishes (the operational
    form of 'f is constant on the leaves').
    """
    d1 = reduced.source_dim
    if f.dim != d1:
        raise InvariantViolation("observable must live on the first factor S")
    x0 = reduced.fiber.offset[:d1]
    Bx = reduced.fiber.basis[:d1]
    M = Bx @ reduced.chart      # quotient directions, ambient x-part
    N = Bx @ reduced.radical    # radical directions, ambient x-part
    scale = max(1.0, np.max(np.abs(f.quad), initial=0.0), np.max(np.abs(f.lin), initial=0.0), abs(f.const))
    grad0 = 2.0 * f.quad @ x0 + f.lin
    ww = N.T @ f.quad @ N
    uw = M.T @ f.quad @ N
    lw = N.T @ grad0
    if (
        np.max(np.abs(ww), initial=0.0) > tol * scale
        or np.max(np.abs(uw), initial=0.0) > tol * scale
        or np.max(np.abs(lw), initial=0.0) > tol * scale
    ):
        raise InvariantViolation(
            "observable is not constant along the null foliation (not weak on this problem)"
        )
    quad = M.T @ f.quad @ M
    lin = M.T @ grad0
    const = f.evaluate(x0)
    return QuadraticObservable(quad, lin, const)


def reduce_in_stages(
    j: LinearRealization, first_k: int, radical_tol: float = RADICAL_TOL
) -> tuple[ReducedSpace, ReducedSpace]:
    """Marsden-Weinstein in two stages: first ``first_k`` constraint rows, then the rest.

    The remaining constraints are pushed to the first quotient with
    ``induce_classical`` (they are weak: all components Poisson-commute) and
    the second reduction runs on the reduced symplectic space.  Returns
    (stage1, stage2).
    """
    if not 0 <= first_k <= j.target_dim:
        raise InvariantViolation("invalid split index")
    j1 = LinearRealization(j.space, j.matrix[:first_k], j.offset[:first_k])
    stage1 = marsden_weinstein(j1, radical_tol)
    qspace = SymplecticVectorSpace(stage1.reduced_omega)
    rows = []
    offs = []
    for i in range(first_k, j.target_dim):
        fi = QuadraticObservable(np.zeros((j.space.dim,) * 2), j.matrix[i], float(j.offset[i]))
        gi = induce_classical(fi, stage1)
        rows.append(gi.lin)
        offs.append(gi.const)
    if rows:
        j2 = LinearRealization(qspace, np.array(rows), np.array(offs))
    else:
        j2 = LinearRealization(qspace, np.zeros((0, qspace.dim)))
    stage2 = marsden_weinstein(j2, radical_tol)
    return stage1, stage2


def darboux_basis(omega, tol: float = 1e-9) -> np.ndarray:
    """Basis P with P^T omega P equal to the standard block form [[0, I], [-I, 0]].

    Built from the eigendecomposition of the Hermitian matrix i*omega: each
    positive eigenvalue sigma with unit eigenvector z = x + i y yields the
    symplectic pair (sqrt(2/sigma) x, -sqrt(2/sigma) y).  Used as the
    congruence certificate between reduced forms: two skew nondegenerate
    forms of equal size are congruent iff both normalize to the standard
    form within tolerance.
    """
    w = np.asarray(omega, dtype=float)
    n = w.shape[0]
    if n % 2 != 0:
        raise InvariantViolation("odd-dimensional form cannot be symplectic")
    if n == 0:
        return np.zeros((0, 0))
    evals, vecs = np.linalg.eigh(1j * w)
    cutoff = tol * max(float(np.max(np.abs(evals))), 1e-300)
    pos = np.where(evals > cutoff)[0]
    if 2 * len(pos) != n:
        raise InvariantViolation("form is degenerate; no full symplectic basis exists")
    es, fs = [], []
    for idx in pos:
        sigma = float(evals[idx])
        z = vecs[:, idx]
        scale = np.sqrt(2.0 / sigma)
        es.append(scale * z.real)
        fs.append(-scale * z.imag)
    return np.column_stack(es + fs)


def standard_form(n_pairs: int) -> np.ndarray:
    J = np.zeros((2 * n_pairs, 2 * n_pairs))
    J[:n_pairs, n_pairs:] = np.eye(n_pairs)
    J[n_pairs:, :n_pairs] = -np.eye(n_pairs)
    return J


def symplectic_congruence_residual(omega1, omega2, tol: float = 1e-9) -> float:
    """Max residual of normalizing both forms to the standard block form."""
    w1 = np.asarray(omega1, dtype=float)
    w2 = np.asarray(omega2, dtype=float)
    if w1.shape != w2.shape:
        raise InvariantViolation("forms of different size are never congruent")
    n = w1.shape[0]
    if n == 0:
        return 0.0
    J = standard_form(n // 2)
    p1 = darboux_basis(w1, tol)
    p2 = darboux_basis(w2, tol)
    r1 = np.max(np.abs(p1.T @ w1 @ p1 - J))
    r2 = np.max(np.abs(p2.T @ w2 @ p2 - J))
    return float(max(r1, r2))


# ---------------------------------------------------------------------------
# lattice circle
# ---------------------------------------------------------------------------


@dataclass
class LatticeCircleConfig:
    """Link configuration on a circle: group-valued (indices) or U(1) (angles)."""

    group: FiniteGroup | None
    links: tuple

    def __post_init__(self):
        if len(self.links) < 1:
            raise InvariantViolation("need at least one link")
        if self.group is not None:
            links = tuple(int(x) for x in self.links)
            if any(not 0 <= x < self.group.order for x in links):
                raise InvariantViolation("link value is not a group element index")
            object.__setattr__(self, "links", links)
        else:
            object.__setattr__(self, "links", tuple(float(x) for x in self.links))

    @property
    def n_links(self) -> int:
        return len(self.links)


def holonomy(config: LatticeCircleConfig):
    """Ordered product U_1 U_2 ... U_N (angle sum mod 2pi for U(1))."""
    if config.group is None:
        return float((sum(config.links) + np.pi) % (2.0 * np.pi) - np.pi)
    out = config.group.identity
    for x in config.links:
        out = config.group.mult(out, x)
    return out


def gauge_transform(config: LatticeCircleConfig, gauge: tuple) -> LatticeCircleConfig:
    """(g·U)_i = g_i U_i g_{i+1}^{-1}, indices mod N."""
    n = config.n_links
    if len(gauge) != n:
        raise InvariantViolation("gauge tuple length must match the number of links")
    if config.group is None:
        new = tuple(
            config.links[i] + gauge[i] - gauge[(i + 1) % n] for i in range(n)
        )
        return LatticeCircleConfig(None, new)
    G = config.group
    new = tuple(
        G.mult(G.mult(int(gauge[i]), config.links[i]), G.inv(int(gauge[(i + 1) % n])))
        for i in range(n)
    )
    return LatticeCircleConfig(G, new)


def gauge_certificate(c1: LatticeCircleConfig, c2: LatticeCircleConfig):
    """A gauge tuple mapping c1 to c2, or None.

    Constructive search: fix g_1, then g_{i+1} = (c2_i)^{-1} g_i c1_i is
    forced link by link; the wrap-around condition holds iff the holonomies
    are conjugate via g_1.
    """
    G = c1.group
    n = c1.n_links
    for g1 in G.elements():
        gauge = [g1]
        ok = True
        for i in range(n - 1):
            gi1 = G.mult(G.mult(G.inv(c2.links[i]), gauge[i]), c1.links[i])
            gauge.append(gi1)
        cand = gauge_transform(c1, tuple(gauge))
        if cand.links == c2.links:
            return tuple(gauge)
    return None


def gauge_orbit_invariant(c1: LatticeCircleConfig, c2: LatticeCircleConfig) -> bool:
    """True iff the configurations are gauge equivalent.

    Two independent routes are run and cross-checked: conjugacy of the
    holonomies, and a constructive search for an explicit gauge tuple.
    """
    if c1.n_links != c2.n_links or (c1.group is None) != (c2.group is None):
        raise InvariantViolation("configurations live on different lattices")
    if c1.group is None:
        d = (holonomy(c1) - holonomy(c2)) % (2.0 * np.pi)
        return min(d, 2.0 * np.pi - d) < 1e-10
    if c1.group is not c2.group and not np.array_equal(c1.group.table, c2.group.table):
        raise InvariantViolation("configurations use different groups")
    cc = conjugacy_classes(c1.group)
    by_class = cc.class_of[holonomy(c1)] == cc.class_of[holonomy(c2)]
    by_search = gauge_certificate(c1, c2) is not None
    if by_class != by_search:
        raise InvariantViolation(
            "holonomy-conjugacy and constructive gauge search disagree (internal error)"
        )
    return bool(by_class)


def all_configs(group: FiniteGroup, n_links: int):
    """Iterate every link configuration (|G|^N of them)."""
    for links in product(range(group.order), repeat=n_links):
        yield LatticeCircleConfig(group, links)


def count_gauge_orbits(group: FiniteGroup, n_links: int, budget: int = 10**6) -> int:
    """Number of gauge orbits on N links, by exhaustive orbit enumeration."""
    total = group.order**n_links
    if total > budget:
        raise InvariantViolation(f"|G|^N = {total} exceeds the enumeration budget {budget}")
    seen = set()
    orbits = 0
    for links in product(range(group.order), repeat=n_links):
        if links in seen:
            continue
        orbits += 1
        stack = [links]
        seen.add(links)
        while stack:
            cur = stack.pop()
            cfg = LatticeCircleConfig(group, cur)
            # single-site gauge generators suffice to span the orbit
            for site in range(n_links):
                for g in group.elements():
                    gauge = [group.identity] * n_links
                    gauge[site] = g
                    img = gauge_transform(cfg, tuple(gauge)).links
                    if img not in seen:
                        seen.add(img)
                        stack.append(img)
    return orbits
