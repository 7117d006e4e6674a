"""Theta-sectors and projective-representation anomalies.

The discrete-quotient model is a particle on the cyclic lattice Z_{N*M} with
the gauge group Z_M acting by translation through N sites.  Inducing from
the character chi_k of Z_M keeps the momentum modes n = k (mod M), giving an
N-dimensional sector whose nearest-neighbour Laplacian spectrum is

    { 2 - 2 cos(2 pi (k + m M) / (N M)) : m = 0..N-1 }.

The sector label k is the theta-angle sampled at finite resolution; the
sectors partition the full lattice spectrum.

The anomaly half handles families of unitaries that represent a group only
up to a scalar multiplier.  The multiplier is extracted and checked to be a
2-cocycle; a representation is anomalous iff the multiplier is not a
coboundary, decided by an exhaustive root-of-unity search (values forced by
generator assignments) plus the coboundary-invariant commuting-pair witness
omega(x,y)/omega(y,x).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation
from .groups import FiniteGroup, UnitaryRep, cyclic, dihedral, regular_rep, subgroup_embedding
from .induction import InductionResult, induce_from_gram, induction_in_stages
from .linalg import operator_norm

ANOMALY_MAX_GROUP = 8
ANOMALY_MAX_ORDER = 8


# ---------------------------------------------------------------------------
# theta sectors on the discrete circle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaSectorProblem:
    """Z_{N*M} lattice, gauge shift by N sites, sector label k in 0..M-1."""

    n_modes: int      # N: sites per gauge cell = physical dimension
    m_sectors: int    # M: order of the discrete gauge group
    sector: int = 0

    def __post_init__(self):
        if self.n_modes < 1 or self.m_sectors < 1:
            raise InvariantViolation("N and M must be >= 1")
        if not 0 <= self.sector < self.m_sectors:
            raise InvariantViolation("sector label must lie in 0..M-1")

    @property
    def sites(self) -> int:
        return self.n_modes * self.m_sectors


def shift_matrix(sites: int) -> np.ndarray:
    """One-site translation (T psi)(x) = psi(x - 1)."""
    T = np.zeros((sites, sites), dtype=complex)
    T[np.arange(sites), np.arange(-1, sites - 1)] = 1.0
    return T


def lattice_laplacian(sites: int) -> np.ndarray:
    T = shift_matrix(sites)
    return 2.0 * np.eye(sites, dtype=complex) - T - T.conj().T


def theta_spectrum_closed_form(problem: ThetaSectorProblem) -> np.ndarray:
    n, m_tot = problem.n_modes, problem.sites
    ms = np.arange(n)
    vals = 2.0 - 2.0 * np.cos(2.0 * np.pi * (problem.sector + ms * problem.m_sectors) / m_tot)
    return np.sort(vals)


@dataclass
class ThetaSector:
    problem: ThetaSectorProblem
    induction: InductionResult
    spectrum: np.ndarray
    reference_spectrum: np.ndarray

    @property
    def dim(self) -> int:
        return self.induction.induced_dim


def theta_sector(problem: ThetaSectorProblem, null_tol: float = 1e-10) -> ThetaSector:
    """Induce the sector from the character chi_k of the shift group."""
    sites = problem.sites
    T = shift_matrix(sites)
    shift_n = np.linalg.matrix_power(T, problem.n_modes)
    gram = np.zeros((sites, sites), dtype=complex)
    block = np.eye(sites, dtype=complex)
    for a in range(problem.m_sectors):
        chi = np.exp(2j * np.pi * problem.sector * a / problem.m_sectors)
        gram += chi * block
        block = block @ shift_n
    gram = gram / problem.m_sectors
    gram = (gram + gram.conj().T) / 2.0
    lap = lattice_laplacian(sites)
    result = induce_from_gram(gram, [lap], null_tol=null_tol)
    spectrum = np.linalg.eigvalsh(
        (result.induced_operators[0] + result.induced_operators[0].conj().T) / 2.0
    )
    return ThetaSector(problem, result, np.sort(spectrum), theta_spectrum_closed_form(problem))


def sector_scan(n_modes: int, m_sectors: int) -> list[ThetaSector]:
    return [theta_sector(ThetaSectorProblem(n_modes, m_sectors, k)) for k in range(m_sectors)]


def staged_vs_direct_demo(weak_ops=None):
    """The disconnected-gauge demo: D4 with its rotation subgroup.

    Induces the regular representation of D4 from the nontrivial character of
    D4/Z4 both in stages and directly; returns the staged-induction record.
    The default test observable is the regular-representation Laplacian over
    a conjugation-closed generating set (equivariant, hence weak at every
    stage).
    """
    G = dihedral(4)
    U = regular_rep(G)
    emb = subgroup_embedding(G, [1])     # rotation r generates Z4
    from .groups import characters_of_abelian, quotient_group

    quotient, _ = quotient_group(emb)
    chars = characters_of_abelian(quotient)
    theta = next(c for c in chars if np.max(np.abs(c.matrices[:, 0, 0] - 1.0)) > 1e-9)
    if weak_ops is None:
        from .groups import electric_generating_set

        gens = electric_generating_set(G)
        lap = len(gens) * np.eye(G.order, dtype=complex)
        for s in gens:
            for x in G.elements():
                # class-closed sums of left translations commute with the
                # left regular representation
                lap[G.mult(s, x), x] -= 1.0
        weak_ops = [lap]
    return induction_in_stages(U, emb, theta, weak_ops)


# ---------------------------------------------------------------------------
# projective representations and anomalies
# ---------------------------------------------------------------------------


class ProjectiveRep:
    """Unitaries with U(x)U(y) = omega(x, y) U(xy); omega a verified 2-cocycle."""

    def __init__(self, group: FiniteGroup, matrices, omega, tol: float = 1e-10):
        mats = np.asarray(matrices, dtype=complex)
        om = np.asarray(omega, dtype=complex)
        n = group.order
        if mats.ndim != 3 or mats.shape[0] != n or mats.shape[1] != mats.shape[2]:
            raise InvariantViolation("need one square matrix per group element")
        if om.shape != (n, n):
            raise InvariantViolation("multiplier table must be |G| x |G|")
        d = mats.shape[1]
        eye = np.eye(d)
        for x in range(n):
            if np.linalg.norm(mats[x].conj().T @ mats[x] - eye) > tol * max(1.0, d):
                raise InvariantViolation(f"U({x}) is not unitary")
        if np.max(np.abs(np.abs(om) - 1.0)) > tol:
            raise InvariantViolation("multiplier values must be unit modulus")
        for x in range(n):
            lhs = mats[x] @ mats
            rhs = om[x][:, None, None] * mats[group.table[x]]
            if np.linalg.norm(lhs - rhs) > tol * n * max(1.0, d):
                raise InvariantViolation("matrices do not satisfy U(x)U(y) = omega(x,y) U(xy)")
        # cocycle identity omega(x,y) omega(xy,z) = omega(y,z) omega(x,yz)
        t = group.table
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    a = om[x, y] * om[t[x, y], z]
                    b = om[y, z] * om[x, t[y, z]]
                    if abs(a - b) > 1e-10:
                        raise InvariantViolation("multiplier fails the 2-cocycle identity")
        self.group = group
        self.matrices = mats
        self.omega = om
        self.dim = d

    def is_genuine(self, tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.omega - 1.0)) <= tol)


def multiplier_of(group: FiniteGroup, matrices, tol: float = 1e-8) -> ProjectiveRep:
    """Extract the multiplier from unitaries assigned to group elements.

    omega(x, y) is the proportionality scalar between U(x)U(y) and U(xy);
    raises if some product is not proportional to the assigned unitary.
    """
    mats = np.asarray(matrices, dtype=complex)
    n = group.order
    if mats.ndim != 3 or mats.shape[0] != n:
        raise InvariantViolation("need one matrix per group element")
    d = mats.shape[1]
    om = np.empty((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            prod = mats[x] @ mats[y]
            target = mats[group.table[x, y]]
            scalar = np.trace(target.conj().T @ prod) / d
            if abs(abs(scalar) - 1.0) > tol or np.linalg.norm(prod - scalar * target) > tol * max(
                1.0, d
            ):
                raise InvariantViolation(
                    f"U({x})U({y}) is not proportional to U({x}·{y}); "
                    "input is not even a projective representation"
                )
            om[x, y] = scalar / abs(scalar)
    return ProjectiveRep(group, mats, om)


def _root_of_unity_order(om: np.ndarray, max_order: int) -> int:
    """Smallest R <= max_order with omega^R = 1 everywhere, else raise."""
    for r in range(1, max_order + 1):
        if np.max(np.abs(om**r - 1.0)) < 1e-8:
            return r
    raise InvariantViolation(
        f"multiplier values are not roots of unity of order <= {max_order}; "
        "anomaly decision out of scope"
    )


def _minimal_generators(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    closure = {group.identity}
    for x in range(group.order):
        if x in closure:
            continue
        gens.append(x)
        frontier = set(closure) | {x}
        while frontier != closure:
            closure = frontier
            frontier = closure | {group.mult(a, b) for a in closure for b in closure}
        if len(closure) == group.order:
            break
    return gens


def coboundary_search(group: FiniteGroup, om: np.ndarray, q: int):
    """Find beta: G -> mu_q with omega = delta beta, or None.

    beta(e) = 1; products force beta(xy) = beta(x)beta(y)/omega(x,y), so only
    the values on a minimal generating set are free.  The search enumerates
    q^{#generators} assignments and propagates; any consistent complete
    assignment is verified against every pair before being returned.
    """
    n = group.order
    gens = _minimal_generators(group)
    roots = np.exp(2j * np.pi * np.arange(q) / q)

    def propagate(assignment):
        beta = {group.identity: 1.0 + 0.0j}
        beta.update(assignment)
        frontier = list(beta.keys())
        while frontier:
            new = []
            for x in list(beta.keys()):
                for y in list(beta.keys()):
                    z = group.mult(x, y)
                    val = beta[x] * beta[y] / om[x, y]
                    if z in beta:
                        if abs(beta[z] - val) > 1e-8:
                            return None
                    else:
                        beta[z] = val
                        new.append(z)
            frontier = new
        if len(beta) != n:
            return None
        return beta

    from itertools import product as iproduct

    for combo in iproduct(range(q), repeat=len(gens)):
        assignment = {g: roots[c] for g, c in zip(gens, combo)}
        beta = propagate(assignment)
        if beta is None:
            continue
        vec = np.array([beta[x] for x in range(n)])
        delta = vec[:, None] * vec[None, :] / vec[group.table]
        if np.max(np.abs(delta - om)) < 1e-6:
            return vec
    return None


def commuting_witness(group: FiniteGroup, om: np.ndarray):
    """A commuting pair with omega(x,y)/omega(y,x) != 1, if one exists.

    The ratio on commuting pairs is invariant under coboundary twists, so a
    nontrivial value certifies the anomaly outright.
    """
    for x in range(group.order):
        for y in range(group.order):
            if group.mult(x, y) != group.mult(y, x):
                continue
            ratio = om[x, y] / om[y, x]
            if abs(ratio - 1.0) > 1e-8:
                return {"pair": (x, y), "ratio": complex(ratio)}
    return None


def is_anomalous(
    rep: ProjectiveRep,
    max_group: int = ANOMALY_MAX_GROUP,
    max_order: int = ANOMALY_MAX_ORDER,
) -> tuple[bool, dict]:
    """Decide whether the multiplier is cohomologically nontrivial.

    Returns (verdict, certificate).  Certificate carries either the
    trivializing beta (verdict False), the commuting-pair witness (verdict
    True, conclusive), or for groups beyond the exhaustive budget only the
    witness-based partial answer.
    """
    group = rep.group
    om = rep.omega
    order = _root_of_unity_order(om, max_order)
    witness = commuting_witness(group, om)
    if witness is not None:
        return True, {"kind": "commuting_pair_witness", **witness}
    if group.order > max_group:
        # sound but incomplete: no witness found, search out of budget
        return False, {
            "kind": "inconclusive_witness_only",
            "note": f"group order {group.order} beyond exhaustive budget {max_group}",
        }
    q = order * group.order
    beta = coboundary_search(group, om, q)
    if beta is not None:
        return False, {"kind": "coboundary", "beta": beta}
    return True, {"kind": "exhausted_search", "root_order": q}


def anomalous_induction_probe(rep: ProjectiveRep, chi_values) -> float:
    """||P^2 - P|| for the attempted group average (1/|G|) sum chi(x) U(x).

    Zero for genuine representations (with chi a character); a nonzero value
    exhibits the projective obstruction operationally.
    """
    chi = np.asarray(chi_values, dtype=complex)
    if chi.shape != (rep.group.order,):
        raise InvariantViolation("need one weight per group element")
    P = np.tensordot(chi, rep.matrices, axes=(0, 0)) / rep.group.order
    return operator_norm(P @ P - P)


def pauli_projective_rep() -> ProjectiveRep:
    """The Z2 x Z2 Pauli assignment: (1,0) -> sigma_x, (0,1) -> sigma_z."""
    g = cyclic(2)
    from .groups import direct_product

    group = direct_product(g, cyclic(2))
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    # element (a, b) encoded as a*2 + b
    mats = np.stack([eye, sz, sx, sx @ sz])
    return multiplier_of(group, mats)


def coboundary_twist(rep: UnitaryRep, beta_values) -> ProjectiveRep:
    """Twist a genuine representation by phases: U'(x) = beta(x) U(x)."""
    beta = np.asarray(beta_values, dtype=complex)
    if beta.shape != (rep.group.order,):
        raise InvariantViolation("need one phase per group element")
    if np.max(np.abs(np.abs(beta) - 1.0)) > 1e-10:
        raise InvariantViolation("twist values must be unit modulus")
    if abs(beta[rep.group.identity] - 1.0) > 1e-10:
        raise InvariantViolation("twist must fix the identity (beta(e) = 1)")
    mats = beta[:, None, None] * rep.matrices
    return multiplier_of(rep.group, mats)
