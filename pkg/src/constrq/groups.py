"""Finite groups with explicit unitary representations.

Groups are multiplication tables on element indices 0..order-1; nothing is
abstract or presented by generators.  Everything is verified exhaustively at
construction (orders stay well below ~1000), which is the point: these groups
stand in for gauge groups, and the induction machinery downstream relies on
their tables being exactly consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .errors import InvariantViolation
from .linalg import as_complex_matrix, operator_norm

REP_TOL = 1e-10


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[x, y]`` is the index of the product ``x·y``.  Identity and
    inverse tables are derived and the full associativity check is run once
    at construction.
    """

    def __init__(self, table, label: str | None = None):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise InvariantViolation("multiplication table must be square")
        n = t.shape[0]
        if n == 0:
            raise InvariantViolation("group must be nonempty")
        if t.min() < 0 or t.max() >= n:
            raise InvariantViolation("table entries must be element indices")
        # each row and column is a permutation (cancellation law)
        ideal = np.arange(n)
        for x in range(n):
            if not np.array_equal(np.sort(t[x]), ideal) or not np.array_equal(np.sort(t[:, x]), ideal):
                raise InvariantViolation(f"row/column {x} of the table is not a permutation")
        # identity
        e = None
        for x in range(n):
            if np.array_equal(t[x], ideal) and np.array_equal(t[:, x], ideal):
                e = x
                break
        if e is None:
            raise InvariantViolation("table has no identity element")
        # associativity, exhaustively: t[t[x,y],z] == t[x,t[y,z]]
        left = t[t, :]            # left[x,y,z] = t[t[x,y], z]
        right = t[:, t]           # right[x,y,z] = t[x, t[y,z]]
        if not np.array_equal(left, right):
            raise InvariantViolation("multiplication table is not associative")
        inv = np.empty(n, dtype=np.int64)
        for x in range(n):
            cand = np.where(t[x] == e)[0]
            if cand.size != 1 or t[cand[0], x] != e:
                raise InvariantViolation(f"element {x} has no two-sided inverse")
            inv[x] = cand[0]
        self.table = t
        self.order = n
        self.identity = e
        self.inverse = inv
        self.label = label

    def mult(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.mult(self.mult(g, x), self.inv(g))

    def elements(self):
        return range(self.order)

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mult(y, x)
            k += 1
        return k

    def __repr__(self):
        name = self.label or "FiniteGroup"
        return f"<{name} of order {self.order}>"


@dataclass
class ConjugacyClasses:
    """Partition of a group into conjugation orbits."""

    group: FiniteGroup
    class_of: np.ndarray          # element index -> class index
    representatives: list[int]
    classes: list[list[int]]

    @property
    def count(self) -> int:
        return len(self.classes)


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClasses:
    """Exact conjugation-orbit partition by exhaustive orbit enumeration."""
    n = group.order
    class_of = -np.ones(n, dtype=np.int64)
    reps, classes = [], []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = sorted({group.conjugate(g, x) for g in range(n)})
        idx = len(reps)
        for y in orbit:
            class_of[y] = idx
        reps.append(x)
        classes.append(orbit)
    return ConjugacyClasses(group, class_of, reps, classes)


@dataclass
class SubgroupEmbedding:
    """An injective homomorphism of one multiplication-table group into another."""

    subgroup: FiniteGroup
    ambient: FiniteGroup
    inclusion: np.ndarray         # subgroup index -> ambient index

    def __post_init__(self):
        inc = np.asarray(self.inclusion, dtype=np.int64)
        if inc.shape != (self.subgroup.order,):
            raise InvariantViolation("inclusion map has the wrong length")
        if len(set(inc.tolist())) != self.subgroup.order:
            raise InvariantViolation("inclusion map is not injective")
        for x in range(self.subgroup.order):
            for y in range(self.subgroup.order):
                if inc[self.subgroup.mult(x, y)] != self.ambient.mult(int(inc[x]), int(inc[y])):
                    raise InvariantViolation("inclusion map is not a homomorphism")
        self.inclusion = inc

    def is_normal(self) -> bool:
        img = set(self.inclusion.tolist())
        return all(self.ambient.conjugate(g, h) in img for g in self.ambient.elements() for h in img)


def subgroup_embedding(ambient: FiniteGroup, elements) -> SubgroupEmbedding:
    """Build the embedding of the subgroup generated by closing ``elements``."""
    img = {ambient.identity}
    frontier = set(int(x) for x in elements) | img
    while frontier != img:
        img = frontier
        frontier = img | {ambient.mult(a, b) for a in img for b in img}
    inc = np.array(sorted(img), dtype=np.int64)
    pos = {int(g): i for i, g in enumerate(inc)}
    table = np.array(
        [[pos[ambient.mult(int(a), int(b))] for b in inc] for a in inc], dtype=np.int64
    )
    return SubgroupEmbedding(FiniteGroup(table), ambient, inc)


def quotient_group(emb: SubgroupEmbedding) -> tuple[FiniteGroup, np.ndarray]:
    """Group on cosets of a normal subgroup, plus the projection map tau.

    Returns ``(Q, tau)`` with ``tau[g]`` the coset index of ambient element
    ``g``; tau is a surjective homomorphism by construction and is verified
    exhaustively.
    """
    if not emb.is_normal():
        raise InvariantViolation("subgroup is not normal in the ambient group")
    G = emb.ambient
    img = sorted(set(emb.inclusion.tolist()))
    tau = -np.ones(G.order, dtype=np.int64)
    cosets = []
    for g in G.elements():
        if tau[g] >= 0:
            continue
        coset = sorted(G.mult(g, h) for h in img)
        idx = len(cosets)
        for y in coset:
            tau[y] = idx
        cosets.append(coset)
    k = len(cosets)
    qtable = np.empty((k, k), dtype=np.int64)
    for a, ca in enumerate(cosets):
        for b, cb in enumerate(cosets):
            qtable[a, b] = tau[G.mult(ca[0], cb[0])]
    Q = FiniteGroup(qtable, label=None if G.label is None else f"{G.label}/H")
    for x in G.elements():
        for y in G.elements():
            if tau[G.mult(x, y)] != Q.mult(int(tau[x]), int(tau[y])):
                raise InvariantViolation("coset multiplication is ill-defined")
    return Q, tau


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


class UnitaryRep:
    """Explicit unitary matrices, one per group element, verified to multiply."""

    def __init__(self, group: FiniteGroup, matrices, tol: float = REP_TOL, name: str | None = None):
        mats = np.asarray(matrices, dtype=complex)
        if mats.ndim != 3 or mats.shape[0] != group.order or mats.shape[1] != mats.shape[2]:
            raise InvariantViolation("need one square matrix per group element")
        d = mats.shape[1]
        eye = np.eye(d)
        if np.linalg.norm(mats[group.identity] - eye) > tol * max(1.0, np.sqrt(d)):
            raise InvariantViolation("U(e) differs from the identity")
        for x in group.elements():
            if np.linalg.norm(mats[x].conj().T @ mats[x] - eye) > tol * max(1.0, np.sqrt(d)):
                raise InvariantViolation(f"U({x}) is not unitary within tolerance")
        for x in group.elements():
            prod = mats[x] @ mats                      # batched over y
            if np.linalg.norm(prod - mats[group.table[x]]) > tol * group.order * max(1.0, np.sqrt(d)):
                raise InvariantViolation(
                    "matrices do not form a representation (U(x)U(y) != U(xy)); "
                    "a projective multiplier may be present"
                )
        self.group = group
        self.matrices = mats
        self.dim = d
        self.name = name

    def character(self) -> np.ndarray:
        return np.einsum("xii->x", self.matrices)

    def __repr__(self):
        tag = f" '{self.name}'" if self.name else ""
        return f"<UnitaryRep{tag} dim={self.dim} of {self.group!r}>"


class PermutationRep:
    """A permutation action stored as index arrays; exact to verify, cheap to average.

    ``perms[x]`` maps basis index i to the image of i under group element x,
    i.e. the unitary matrix is ``U(x)[perms[x][i], i] = 1``.
    """

    def __init__(self, group: FiniteGroup, perms):
        p = np.asarray(perms, dtype=np.int64)
        if p.ndim != 2 or p.shape[0] != group.order:
            raise InvariantViolation("need one permutation per group element")
        dim = p.shape[1]
        ideal = np.arange(dim)
        if not np.array_equal(p[group.identity], ideal):
            raise InvariantViolation("identity element must act trivially")
        for x in group.elements():
            if not np.array_equal(np.sort(p[x]), ideal):
                raise InvariantViolation(f"element {x} does not act by a permutation")
        # exact homomorphism check: perm(x) ∘ perm(y) = perm(xy)
        for x in group.elements():
            if not np.array_equal(p[x][p], p[group.table[x]]):
                raise InvariantViolation("permutations do not compose like the group")
        self.group = group
        self.perms = p
        self.dim = dim

    def matrix(self, x: int) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        m[self.perms[x], np.arange(self.dim)] = 1.0
        return m

    def to_unitary(self, tol: float = REP_TOL) -> UnitaryRep:
        mats = np.zeros((self.group.order, self.dim, self.dim), dtype=complex)
        cols = np.arange(self.dim)
        for x in self.group.elements():
            mats[x, self.perms[x], cols] = 1.0
        return UnitaryRep(self.group, mats, tol=tol)

    def average(self) -> np.ndarray:
        """Group average (1/|G|) sum of permutation matrices, by counting."""
        P = np.zeros((self.dim, self.dim))
        cols = np.arange(self.dim)
        for x in self.group.elements():
            P[self.perms[x], cols] += 1.0
        return (P / self.group.order).astype(complex)

    def character(self) -> np.ndarray:
        return np.array([np.count_nonzero(self.perms[x] == np.arange(self.dim)) for x in self.group.elements()], dtype=complex)


def trivial_rep(group: FiniteGroup) -> UnitaryRep:
    mats = np.ones((group.order, 1, 1), dtype=complex)
    return UnitaryRep(group, mats, name="trivial")


def regular_rep(group: FiniteGroup) -> UnitaryRep:
    """Left regular representation: U(x) e_y = e_{xy}."""
    perms = group.table.copy()   # perms[x][y] = xy
    return PermutationRep(group, perms).to_unitary()


def conjugation_rep(group: FiniteGroup) -> PermutationRep:
    """Action of G on functions on G by conjugation, as a permutation rep."""
    perms = np.empty((group.order, group.order), dtype=np.int64)
    for g in group.elements():
        for x in group.elements():
            perms[g, x] = group.conjugate(g, x)
    return PermutationRep(group, perms)


def average_projector(rep: UnitaryRep, tol: float = REP_TOL) -> np.ndarray:
    """Group average P = (1/|G|) sum_x U(x); a Hermitian projector for genuine reps."""
    P = rep.matrices.mean(axis=0)
    if operator_norm(P @ P - P) > 1e-10 * max(1.0, rep.group.order) or operator_norm(P - P.conj().T) > tol * rep.group.order:
        raise InvariantViolation(
            "group average is not a projector; input cannot be a genuine unitary representation"
        )
    return P


def projector_rank(P) -> int:
    """Rank of a (numerical) projector: eigenvalues above 1/2.

    Cross-checked against the rounded trace, which must agree to 1e-6.
    """
    P = as_complex_matrix(P)
    evals = np.linalg.eigvalsh((P + P.conj().T) / 2.0)
    rank = int(np.count_nonzero(evals > 0.5))
    tr = float(np.trace(P).real)
    if abs(tr - round(tr)) > 1e-6 or round(tr) != rank:
        raise InvariantViolation(f"projector rank ambiguous: trace {tr}, eigencount {rank}")
    return rank


def tensor_rep(u: UnitaryRep, v: UnitaryRep) -> UnitaryRep:
    """(U ⊗ V)(x) = U(x) ⊗ V(x) on the same group."""
    if u.group is not v.group and not np.array_equal(u.group.table, v.group.table):
        raise InvariantViolation("tensor factors must be representations of the same group")
    mats = np.einsum("xij,xkl->xikjl", u.matrices, v.matrices).reshape(
        u.group.order, u.dim * v.dim, u.dim * v.dim
    )
    return UnitaryRep(u.group, mats)


def characters_of_abelian(group: FiniteGroup, tol: float = 1e-9) -> list[UnitaryRep]:
    """All |G| one-dimensional characters of an abelian group.

    The regular representation's permutation matrices commute, so a generic
    real linear combination has simple spectrum and its eigenvectors are the
    characters.  The extraction is verified (homomorphism, orthonormality,
    distinctness) and retried on a deterministic seed ladder if the chosen
    combination happens to be degenerate.
    """
    if not group.is_abelian():
        raise InvariantViolation("characters_of_abelian requires an abelian group")
    n = group.order
    reg = np.zeros((n, n, n))
    for x in group.elements():
        reg[x, group.table[x], np.arange(n)] = 1.0
    for attempt in range(8):
        rng = np.random.default_rng(12345 + attempt)
        coeffs = rng.normal(size=n)
        M = np.tensordot(coeffs, reg, axes=(0, 0))
        # commuting normal family: diagonalize the combination, then read off
        # each element's eigenvalue on every eigenvector
        _, vecs = np.linalg.eig(M)
        chars = np.empty((n, n), dtype=complex)
        ok = True
        for k in range(n):
            v = vecs[:, k]
            v = v / np.linalg.norm(v)
            chars[k] = np.einsum("i,xij,j->x", v.conj(), reg, v)
        # verify: homomorphism property and unit modulus
        for k in range(n):
            c = chars[k]
            if np.max(np.abs(np.abs(c) - 1.0)) > tol:
                ok = False
                break
            if abs(c[group.identity] - 1.0) > tol:
                ok = False
                break
            outer = c[group.table]
            if np.max(np.abs(np.outer(c, c) - outer)) > tol * n:
                ok = False
                break
        if ok:
            gram = chars.conj() @ chars.T / n
            if np.max(np.abs(gram - np.eye(n))) > tol * n:
                ok = False
        if ok:
            # deterministic ordering: trivial character first, the rest by
            # rounded value tuples
            keys = [tuple(np.round(chars[k], 9).view(float)) for k in range(n)]
            trivial = [int(np.max(np.abs(chars[k] - 1.0)) < 1e-6) for k in range(n)]
            perm = sorted(range(n), key=lambda k: (1 - trivial[k], keys[k]))
            return [
                UnitaryRep(group, chars[k].reshape(n, 1, 1), name=f"chi{i}")
                for i, k in enumerate(perm)
            ]
    raise InvariantViolation("failed to extract a complete character set (degenerate combinations)")


def character_inner(c1, c2, group: FiniteGroup) -> complex:
    """(1/|G|) sum_x c1(x) conj(c2(x))."""
    c1 = np.asarray(c1, dtype=complex)
    c2 = np.asarray(c2, dtype=complex)
    return complex(np.sum(c1 * c2.conj()) / group.order)


def invariant_dim_oracle(u: UnitaryRep, v: UnitaryRep) -> int:
    """Character oracle for dim of the invariant subspace of U ⊗ V.

    Equals the multiplicity of the conjugate of V in U when V is irreducible.
    """
    val = complex(np.sum(u.character() * v.character()) / u.group.order)
    if abs(val.imag) > 1e-8 or abs(val.real - round(val.real)) > 1e-8:
        raise InvariantViolation(f"character inner product {val} is not a nonnegative integer")
    return int(round(val.real))


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvariantViolation("cyclic group order must be >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, label=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element (a, b) = r^a s^b encoded as a + n*b."""
    if n < 1:
        raise InvariantViolation("dihedral parameter must be >= 1")
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a, b in product(range(n), range(2)):
        for c, d in product(range(n), range(2)):
            aa = (a + (c if b == 0 else -c)) % n
            bb = (b + d) % 2
            table[a + n * b, c + n * d] = aa + n * bb
    return FiniteGroup(table, label=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters (meant for small n; order n!)."""
    if not 1 <= n <= 6:
        raise InvariantViolation("symmetric preset supports 1 <= n <= 6")
    elems = sorted(permutations(range(n)))
    pos = {p: i for i, p in enumerate(elems)}
    size = len(elems)
    table = np.empty((size, size), dtype=np.int64)
    for i, p in enumerate(elems):
        for k, q in enumerate(elems):
            table[i, k] = pos[tuple(p[q[j]] for j in range(n))]
    return FiniteGroup(table, label=f"S{n}")


def quaternion() -> FiniteGroup:
    """Quaternion group Q8; elements ordered [1, -1, i, -i, j, -j, k, -k]."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def split(s):
        return (-1, s[1:]) if s.startswith("-") else (1, s)

    rules = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    pos = {s: i for i, s in enumerate(names)}
    table = np.empty((8, 8), dtype=np.int64)
    for x in names:
        for y in names:
            sx, bx = split(x)
            sy, by = split(y)
            sz, bz = rules[(bx, by)]
            s = sx * sy * sz
            table[pos[x], pos[y]] = pos[bz if s == 1 else "-" + bz]
    return FiniteGroup(table, label="Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with elements (a, b) encoded as a * |H| + b."""
    n, m = g.order, h.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    for a, b in product(range(n), range(m)):
        for c, d in product(range(n), range(m)):
            table[a * m + b, c * m + d] = g.mult(a, c) * m + h.mult(b, d)
    la = g.label or "G"
    lb = h.label or "H"
    return FiniteGroup(table, label=f"{la}x{lb}")


def group_preset(name: str) -> FiniteGroup:
    """Look up a preset by label: Zn, Dn, Q8, Sn, and x-separated products."""
    name = name.strip()
    if "x" in name:
        parts = name.split("x")
        g = group_preset(parts[0])
        for p in parts[1:]:
            g = direct_product(g, group_preset(p))
        return g
    if name == "Q8":
        return quaternion()
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return dihedral(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit():
        return symmetric(int(name[1:]))
    raise InvariantViolation(f"unknown group preset '{name}'")


# irreducible representations for the preset groups used by the induction
# dimension-law checks; each catalog is complete (sum of squared dims = |G|)


def _s3_standard_matrices(group: FiniteGroup) -> np.ndarray:
    # 2-dim irrep = permutation rep restricted to the complement of (1,1,1)
    elems = sorted(permutations(range(3)))
    basis = np.array([[1, -1, 0], [1, 1, -2]], dtype=float)
    basis = (basis / np.linalg.norm(basis, axis=1, keepdims=True)).T  # 3x2
    mats = np.empty((6, 2, 2), dtype=complex)
    for i, p in enumerate(elems):
        perm = np.zeros((3, 3))
        for src in range(3):
            perm[p[src], src] = 1.0
        mats[i] = basis.T @ perm @ basis
    return mats


def irrep_catalog(group: FiniteGroup) -> list[UnitaryRep]:
    """Complete list of irreducible unitary representations for preset groups.

    Available for Z_n, S3, D4, Q8 and direct products of cyclics (via
    characters).  Raises for other labels: representations of ad-hoc groups
    must be supplied explicitly.
    """
    label = group.label or ""
    if label.startswith("Z") or (("x" in label) and group.is_abelian()):
        return characters_of_abelian(group)
    if label == "S3":
        elems = sorted(permutations(range(3)))
        triv = trivial_rep(group)
        triv.name = "trivial"
        sign = np.array([_perm_sign(p) for p in elems], dtype=complex).reshape(6, 1, 1)
        reps = [
            triv,
            UnitaryRep(group, sign, name="sign"),
            UnitaryRep(group, _s3_standard_matrices(group), name="standard"),
        ]
    elif label == "D4":
        n = 4
        reps = [
            _dihedral_char(group, n, 1, 1, "trivial"),
            _dihedral_char(group, n, 1, -1, "sign_s"),
            _dihedral_char(group, n, -1, 1, "sign_r"),
            _dihedral_char(group, n, -1, -1, "sign_rs"),
            _dihedral_twod(group, n, 1, "twod"),
        ]
    elif label == "Q8":
        sz = np.array([[1, 0], [0, -1]], dtype=complex)
        I2 = np.eye(2, dtype=complex)
        qi = 1j * sz
        qj = np.array([[0, 1], [-1, 0]], dtype=complex)
        qk = qi @ qj
        two = np.stack([I2, -I2, qi, -qi, qj, -qj, qk, -qk])
        reps = []
        for (ei, ej, nm) in [(1, 1, "trivial"), (1, -1, "chi_j"), (-1, 1, "chi_i"), (-1, -1, "chi_k")]:
            vals = np.array([1, 1, ei, ei, ej, ej, ei * ej, ei * ej], dtype=complex)
            reps.append(UnitaryRep(group, vals.reshape(8, 1, 1), name=nm))
        reps.append(UnitaryRep(group, two, name="twod"))
    else:
        raise InvariantViolation(f"no built-in irrep catalog for group '{label}'")
    total = sum(r.dim**2 for r in reps)
    if total != group.order:
        raise InvariantViolation("irrep catalog incomplete (sum of squared dims != |G|)")
    return reps


def _perm_sign(p) -> int:
    sign, seen = 1, set()
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _dihedral_char(group, n, alpha, beta, name):
    vals = np.array([(alpha**a) * (beta**b) for b in range(2) for a in range(n)], dtype=complex)
    return UnitaryRep(group, vals.reshape(2 * n, 1, 1), name=name)


def _dihedral_twod(group, n, k, name):
    F = np.array([[1, 0], [0, -1]], dtype=complex)
    mats = np.empty((2 * n, 2, 2), dtype=complex)
    for b in range(2):
        for a in range(n):
            th = 2 * np.pi * k * a / n
            R = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]], dtype=complex)
            mats[a + n * b] = R @ (F if b else np.eye(2))
    return UnitaryRep(group, mats, name=name)


def named_irrep(group: FiniteGroup, name: str) -> UnitaryRep:
    for rep in irrep_catalog(group):
        if rep.name == name:
            return rep
    raise InvariantViolation(f"group '{group.label}' has no built-in irrep named '{name}'")


# conjugation-closed symmetric generating sets, per preset label; used by the
# gauge module's electric Laplacian (class-closure makes the per-link sum
# commute with every gauge move)
def electric_generating_set(group: FiniteGroup) -> list[int]:
    label = group.label or ""
    cc = conjugacy_classes(group)
    if label.startswith("Z") and label[1:].isdigit():
        n = group.order
        gens = {1 % n, (n - 1) % n}
        gens.discard(group.identity)
        return sorted(gens)
    if label == "S3":
        # closure of {transposition, rotation, rotation^-1}: both nontrivial classes
        return sorted(x for x in group.elements() if x != group.identity and group.element_order(x) in (2, 3))
    if label == "D4":
        rot = 1           # r
        refl = 4          # s  (encoding a + n*b)
        chosen = {cc.class_of[rot], cc.class_of[refl]}
        return sorted(x for x in group.elements() if cc.class_of[x] in chosen)
    if label == "Q8":
        return [2, 3, 4, 5]     # ±i, ±j
    raise InvariantViolation(f"no electric generating set registered for group '{label}'")
