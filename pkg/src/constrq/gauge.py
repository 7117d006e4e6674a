"""Lattice gauge theory on a circle: physical spaces by induction.

The unconstrained Hilbert space is spanned by link configurations (functions
on G^N for finite structure group, band-limited Fourier modes for U(1)).
The gauge group acts by (g·U)_i = g_i^{-1} U_i g_{i+1} with indices mod N;
a based model freezes g_1 = e.  Inducing from the trivial representation,
the Gram matrix is the gauge average, and the physical space comes out as

    full gauge group  ->  class functions of the holonomy   (dim = #classes)
    based gauge group ->  all functions of the holonomy     (dim = |G|)

with U(1) giving the 2K+1 retained holonomy modes in both cases (conjugation
is trivial).  An explicit unitary intertwiner onto the reference model is
constructed and checked, and gauge-invariant observables (Wilson characters,
the electric Laplacian) are descended and compared against operators built
directly on the reference space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvariantViolation
from .groups import (
    FiniteGroup,
    PermutationRep,
    conjugacy_classes,
    electric_generating_set,
)
from .induction import InductionResult, induce_from_gram
from .linalg import operator_norm

CONFIG_BUDGET = 10**6       # |G|^N cap (spec-level guard)
DENSE_BUDGET = 4096         # configurations for which dense operators are built


@dataclass
class LatticeGaugeModel:
    """Lattice circle: finite structure group, or U(1) with Fourier cutoff."""

    group: FiniteGroup | None
    n_links: int
    based: bool = False
    u1_cutoff: int | None = None

    def __post_init__(self):
        if self.n_links < 1:
            raise InvariantViolation("need at least one link")
        if self.group is None:
            if self.u1_cutoff is None or self.u1_cutoff < 1:
                raise InvariantViolation("U(1) model needs a Fourier cutoff K >= 1")
        else:
            if self.u1_cutoff is not None:
                raise InvariantViolation("cutoff only applies to the U(1) model")
            if self.group.order**self.n_links > CONFIG_BUDGET:
                raise InvariantViolation(
                    f"|G|^N = {self.group.order ** self.n_links} exceeds the budget "
                    f"{CONFIG_BUDGET}; use a smaller group or fewer links"
                )

    @property
    def state_dim(self) -> int:
        if self.group is None:
            return (2 * self.u1_cutoff + 1) ** self.n_links
        return self.group.order**self.n_links

    def _require_dense(self):
        if self.state_dim > DENSE_BUDGET:
            raise InvariantViolation(
                f"state space of dim {self.state_dim} exceeds the dense-operator budget "
                f"{DENSE_BUDGET}; reduce |G|, N or the cutoff"
            )


# -- finite case: configuration indexing -------------------------------------


def _config_strides(order: int, n: int) -> np.ndarray:
    return order ** np.arange(n - 1, -1, -1)


def all_config_tuples(model: LatticeGaugeModel) -> np.ndarray:
    """(#configs, N) array of link tuples in index order."""
    G = model.group
    n = model.n_links
    grids = np.meshgrid(*([np.arange(G.order)] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=-1)


def holonomy_per_config(model: LatticeGaugeModel) -> np.ndarray:
    """Holonomy (element index) of every configuration."""
    G = model.group
    cfgs = all_config_tuples(model)
    out = np.full(cfgs.shape[0], G.identity, dtype=np.int64)
    for i in range(model.n_links):
        out = G.table[out, cfgs[:, i]]
    return out


def gauge_tuples(model: LatticeGaugeModel):
    """Iterate the gauge group: all of G^N, or g_1 = e for based models."""
    G = model.group
    n = model.n_links
    if model.based:
        for rest in product(range(G.order), repeat=n - 1):
            yield (G.identity,) + rest
    else:
        yield from product(range(G.order), repeat=n)


def gauge_permutation(model: LatticeGaugeModel, gauge: tuple) -> np.ndarray:
    """Permutation of configuration indices effected by one gauge tuple.

    Uses (g·U)_i = g_i^{-1} U_i g_{i+1}; the permutation maps the index of U
    to the index of g·U.
    """
    G = model.group
    n = model.n_links
    cfgs = all_config_tuples(model)
    strides = _config_strides(G.order, n)
    new_index = np.zeros(cfgs.shape[0], dtype=np.int64)
    for i in range(n):
        gi = int(gauge[i])
        gnext = int(gauge[(i + 1) % n])
        transformed = G.table[G.table[G.inverse[gi], cfgs[:, i]], gnext]
        new_index += transformed * strides[i]
    return new_index


def gauge_representation(model: LatticeGaugeModel) -> PermutationRep:
    """The gauge group (as a direct power) acting by permutations on configurations.

    Finite groups only; the U(1) gauge group is not enumerable and its
    averaged Gram is built directly in ``physical_space``.
    """
    if model.group is None:
        raise InvariantViolation(
            "U(1) gauge group is continuous; use physical_space, which averages analytically"
        )
    model._require_dense()
    G = model.group
    n = model.n_links
    n_gauge = n - 1 if model.based else n
    if G.order ** (2 * n_gauge) > 4 * 10**6 and G.order**n_gauge > 2048:
        raise InvariantViolation(
            f"gauge group of order {G.order ** n_gauge} is too large to materialize; "
            "use the averaged Gram via physical_space"
        )
    # the gauge group as a multiplication table (direct power, based or not)
    tuples = list(gauge_tuples(model))
    pos = {t: i for i, t in enumerate(tuples)}
    size = len(tuples)
    table = np.empty((size, size), dtype=np.int64)
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            table[a, b] = pos[tuple(G.mult(x, y) for x, y in zip(ta, tb))]
    gamma = FiniteGroup(table, label=f"gauge({G.label},N={n}{',based' if model.based else ''})")
    perms = np.stack([gauge_permutation(model, t) for t in tuples])
    return PermutationRep(gamma, perms)


def gauge_average_gram(model: LatticeGaugeModel) -> np.ndarray:
    """Gram of the trivially-induced form: the gauge-group average."""
    if model.group is None:
        return _u1_selection_projector(model)
    model._require_dense()
    dim = model.state_dim
    P = np.zeros((dim, dim))
    cols = np.arange(dim)
    count = 0
    for gauge in gauge_tuples(model):
        P[gauge_permutation(model, gauge), cols] += 1.0
        count += 1
    return (P / count).astype(complex)


# -- U(1) in the Fourier basis ------------------------------------------------


def u1_modes(model: LatticeGaugeModel) -> np.ndarray:
    """(#states, N) integer array of Fourier mode tuples, k_i in [-K, K]."""
    K = model.u1_cutoff
    rng = np.arange(-K, K + 1)
    grids = np.meshgrid(*([rng] * model.n_links), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=-1)


def _u1_selection_projector(model: LatticeGaugeModel) -> np.ndarray:
    """Averaging over the torus keeps exactly the equal-mode states.

    Full and based gauge groups impose the same constraint (conjugation is
    trivial for an abelian group): k_1 = ... = k_N.
    """
    modes = u1_modes(model)
    equal = np.all(modes == modes[:, :1], axis=1)
    return np.diag(equal.astype(complex))


# -- physical space ------------------------------------------------------------


@dataclass
class PhysicalSpace:
    """Induced physical Hilbert space with an intertwiner to the reference model.

    The reference is C^{#classes} (class functions of the holonomy) for full
    gauge, C^{|G|} (functions of the holonomy) for based gauge, and the 2K+1
    holonomy modes for U(1).  ``intertwiner`` is unitary: rows indexed by the
    reference basis, columns by the abstract induced space.
    """

    model: LatticeGaugeModel
    induction: InductionResult
    intertwiner: np.ndarray
    reference_labels: list
    unitarity_residual: float

    @property
    def dim(self) -> int:
        return self.induction.induced_dim


def physical_space(model: LatticeGaugeModel, null_tol: float = 1e-10) -> PhysicalSpace:
    """Induce from the trivial representation of the gauge group."""
    gram = gauge_average_gram(model)
    if operator_norm(gram @ gram - gram) > 1e-10 * max(1.0, model.state_dim):
        raise InvariantViolation("gauge average failed to be a projector")
    result = induce_from_gram(gram, null_tol=null_tol)
    V = result.vmap

    if model.group is None:
        modes = u1_modes(model)
        K = model.u1_cutoff
        labels = list(range(-K, K + 1))
        R = np.zeros((len(labels), model.state_dim))
        equal = np.all(modes == modes[:, :1], axis=1)
        for row, k in enumerate(labels):
            sel = equal & (modes[:, 0] == k)
            R[row, sel] = 1.0   # single state per holonomy mode
    else:
        hol = holonomy_per_config(model)
        if model.based:
            labels = list(range(model.group.order))
            fiber_label = hol
        else:
            cc = conjugacy_classes(model.group)
            labels = list(range(cc.count))
            fiber_label = cc.class_of[hol]
        R = np.zeros((len(labels), model.state_dim))
        for row, lab in enumerate(labels):
            sel = fiber_label == lab
            count = int(np.count_nonzero(sel))
            if count == 0:
                raise InvariantViolation("empty holonomy fiber (internal error)")
            R[row, sel] = 1.0 / np.sqrt(count)
    M = R @ V.conj().T
    if M.shape[0] != M.shape[1]:
        raise InvariantViolation(
            f"induced dimension {M.shape[1]} does not match the reference model {M.shape[0]}"
        )
    eye = np.eye(M.shape[0])
    residual = max(
        operator_norm(M @ M.conj().T - eye), operator_norm(M.conj().T @ M - eye)
    )
    if residual > 1e-9 * max(1.0, M.shape[0]):
        raise InvariantViolation(f"intertwiner is not unitary (residual {residual:.3e})")
    return PhysicalSpace(model, result, M, labels, float(residual))


# -- observables ---------------------------------------------------------------


def wilson_operator(model: LatticeGaugeModel, values) -> np.ndarray:
    """Multiplication by f(holonomy) on the unconstrained space.

    ``values``: per-element values of a class function for finite G (any
    function of G is allowed for based models), or an integer winding m for
    U(1), where the Hermitian observable cos(m·theta_total) is used.
    """
    if model.group is None:
        m = int(values)
        modes = u1_modes(model)
        dim = model.state_dim
        K = model.u1_cutoff
        W = np.zeros((dim, dim), dtype=complex)
        index_of = {tuple(t): i for i, t in enumerate(modes)}
        for i, t in enumerate(modes):
            shifted = tuple(t + m)
            if all(-K <= k <= K for k in shifted):
                W[index_of[shifted], i] = 1.0
        return (W + W.conj().T) / 2.0
    model._require_dense()
    vals = np.asarray(values, dtype=complex)
    if vals.shape != (model.group.order,):
        raise InvariantViolation("need one value per group element")
    if not model.based:
        cc = conjugacy_classes(model.group)
        for cls in cc.classes:
            ref = vals[cls[0]]
            if any(abs(vals[x] - ref) > 1e-12 for x in cls):
                raise InvariantViolation(
                    "Wilson weight must be a class function for the full gauge group"
                )
    hol = holonomy_per_config(model)
    return np.diag(vals[hol])


def electric_laplacian(model: LatticeGaugeModel) -> np.ndarray:
    """Sum over links of the one-link kinetic term.

    U(1): diag(sum_i k_i^2).  Finite G: sum over links of
    sum_{s in S} (I - L_i(s)) with S the conjugation-closed symmetric
    generating set registered for the group (class closure keeps the operator
    gauge invariant).
    """
    if model.group is None:
        modes = u1_modes(model)
        return np.diag(np.sum(modes.astype(float) ** 2, axis=1)).astype(complex)
    model._require_dense()
    G = model.group
    gens = electric_generating_set(G)
    dim = model.state_dim
    n = model.n_links
    cfgs = all_config_tuples(model)
    strides = _config_strides(G.order, n)
    base = cfgs @ strides
    lap = np.zeros((dim, dim))
    lap[np.arange(dim), np.arange(dim)] = float(len(gens) * n)
    for i in range(n):
        rest = base - cfgs[:, i] * strides[i]
        for s in gens:
            # left translation on link i: U_i -> s^{-1} U_i
            target = rest + G.table[G.inverse[s], cfgs[:, i]] * strides[i]
            lap[target, np.arange(dim)] -= 1.0
    return lap.astype(complex)


def reference_operator(model: LatticeGaugeModel, kind: str, values=None) -> np.ndarray:
    """The observable built directly on the reference model.

    kind='wilson': multiplication by the class function (full), the function
    (based), or the cosine shift (U(1)).  kind='electric': N times the
    one-link Laplacian on class functions / functions on G, or diag(N k^2).
    """
    if model.group is None:
        K = model.u1_cutoff
        ks = np.arange(-K, K + 1)
        if kind == "electric":
            return np.diag(model.n_links * ks.astype(float) ** 2).astype(complex)
        if kind == "wilson":
            m = int(values)
            dim = 2 * K + 1
            W = np.zeros((dim, dim), dtype=complex)
            for i, k in enumerate(ks):
                if -K <= k + m <= K:
                    W[i + m, i] = 1.0
            return (W + W.conj().T) / 2.0
        raise InvariantViolation(f"unknown observable kind '{kind}'")

    G = model.group
    cc = conjugacy_classes(G)
    if kind == "wilson":
        vals = np.asarray(values, dtype=complex)
        if model.based:
            return np.diag(vals)
        return np.diag(np.array([vals[cls[0]] for cls in cc.classes]))
    if kind != "electric":
        raise InvariantViolation(f"unknown observable kind '{kind}'")
    gens = electric_generating_set(G)
    one_link = np.zeros((G.order, G.order))
    one_link[np.arange(G.order), np.arange(G.order)] = float(len(gens))
    for s in gens:
        # (L(s) f)(x) = f(s^{-1} x)
        for x in G.elements():
            one_link[G.mult(G.inv(s), x), x] -= 1.0
    one_link = model.n_links * one_link
    if model.based:
        return one_link.astype(complex)
    # compress to normalized class indicators
    B = np.zeros((G.order, cc.count))
    for c, cls in enumerate(cc.classes):
        B[cls, c] = 1.0 / np.sqrt(len(cls))
    return (B.T @ one_link @ B).astype(complex)


def induced_observable(
    model: LatticeGaugeModel,
    kind: str,
    values=None,
    phys: PhysicalSpace | None = None,
) -> dict:
    """Descend a gauge-invariant observable and compare with the reference build.

    Returns a dict with the induced matrix (in the reference basis), the
    reference matrix, both spectra, and the residuals.  Raises if the
    observable fails the weak-observable test.
    """
    phys = physical_space(model) if phys is None else phys
    if kind == "wilson":
        big = wilson_operator(model, values)
    elif kind == "electric":
        big = electric_laplacian(model)
    else:
        raise InvariantViolation(f"unknown observable kind '{kind}'")
    induced, residual = phys.induction.induce_operator(big)
    M = phys.intertwiner
    in_reference = M @ induced @ M.conj().T
    ref = reference_operator(model, kind, values)
    spec_ind = np.linalg.eigvalsh((in_reference + in_reference.conj().T) / 2.0)
    spec_ref = np.linalg.eigvalsh((ref + ref.conj().T) / 2.0)
    return {
        "kind": kind,
        "induced": in_reference,
        "reference": ref,
        "spectrum_induced": spec_ind,
        "spectrum_reference": spec_ref,
        "matrix_gap": float(operator_norm(in_reference - ref)),
        "spectrum_gap": float(np.max(np.abs(spec_ind - spec_ref))) if spec_ind.size else 0.0,
        "projection_residual": residual,
    }
