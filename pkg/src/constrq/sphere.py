"""Strict quantization of the sphere by spin coherent states.

Classical observables are real polynomials in the unit-sphere coordinates
(nx, ny, nz), reduced modulo nx^2 + ny^2 + nz^2 = 1.  Quantization maps a
polynomial f to the (2j+1)-dimensional Toeplitz-type operator

    Q(f) = ((2j+1)/4pi) * integral of f(n) |n><n| over the sphere,

with |n> the spin-j coherent state at n.  The deformation parameter is tied
to the spin by hbar = 1/(j+1); with the bracket convention
{n_a, n_b} = -eps_{abc} n_c this makes Q(n_a) = J_a/(j+1) satisfy the Dirac
condition exactly, and the remaining strict-quantization defects decay at
rate O(hbar).

Quadrature is Gauss-Legendre in cos(theta) times a uniform trapezoid in phi,
with default orders high enough to be exact for every polynomial integrand
that arises (coherent dyads are band-limited of degree 2j).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import InvariantViolation
from .linalg import jordan, lie_bracket, operator_norm

_VAR_TO_AXIS = {"nx": 0, "ny": 1, "nz": 2}


class PolynomialObservable:
    """Real polynomial in (nx, ny, nz) modulo the unit-sphere relation.

    Canonical form: the nz-exponent of every monomial is 0 or 1; higher
    powers are eliminated through nz^2 = 1 - nx^2 - ny^2.  Coefficients are
    plain floats; all operations (sum, product, Poisson bracket) stay inside
    canonical form.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = _reduce_terms(terms or {})

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: float) -> "PolynomialObservable":
        return cls({(0, 0, 0): float(c)})

    @classmethod
    def coordinate(cls, axis) -> "PolynomialObservable":
        """Coordinate function: axis in {0,1,2} or {'nx','ny','nz'}."""
        if isinstance(axis, str):
            axis = _VAR_TO_AXIS[axis]
        expo = [0, 0, 0]
        expo[axis] = 1
        return cls({tuple(expo): 1.0})

    @classmethod
    def from_string(cls, text: str) -> "PolynomialObservable":
        """Parse terms like ``2.5*nx^2*nz - ny + 0.5``."""
        return parse_polynomial(text)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0.0) + v
        return PolynomialObservable(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1.0) * _as_poly(other)

    def __rsub__(self, other):
        return _as_poly(other) + (-1.0) * self

    def __mul__(self, other):
        if np.isscalar(other):
            return PolynomialObservable({k: v * float(other) for k, v in self.terms.items()})
        other = _as_poly(other)
        out: dict = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0.0) + v1 * v2
        return PolynomialObservable(out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1.0)

    # -- calculus ----------------------------------------------------------

    def partial(self, axis: int) -> "PolynomialObservable":
        """Formal partial derivative of the canonical representative."""
        out: dict = {}
        for expo, v in self.terms.items():
            if expo[axis] == 0:
                continue
            new = list(expo)
            new[axis] -= 1
            key = tuple(new)
            out[key] = out.get(key, 0.0) + v * expo[axis]
        return PolynomialObservable(out)

    def poisson_bracket(self, other: "PolynomialObservable") -> "PolynomialObservable":
        """Bracket generated by {n_a, n_b} = -eps_{abc} n_c, extended by Leibniz.

        Implemented as {f, g} = -sum_{abc} eps_{abc} (df/dn_a)(dg/dn_b) n_c
        on canonical representatives; the bivector is tangent to the sphere,
        so the result is representative-independent.
        """
        other = _as_poly(other)
        out = PolynomialObservable()
        for (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            ea = PolynomialObservable.coordinate(c)
            term = (self.partial(a) * other.partial(b) - self.partial(b) * other.partial(a)) * ea
            out = out + (-1.0) * term
        return out

    # -- queries -----------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(k) for k in self.terms)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(v) <= tol for v in self.terms.values())

    def evaluate(self, points) -> np.ndarray:
        """Evaluate at an (..., 3) array of ambient coordinates."""
        pts = np.asarray(points, dtype=float)
        x, y, z = pts[..., 0], pts[..., 1], pts[..., 2]
        val = np.zeros(pts.shape[:-1])
        for (a, b, c), v in self.terms.items():
            val = val + v * x**a * y**b * z**c
        return val

    def coefficients_close(self, other, tol: float = 1e-12) -> bool:
        other = _as_poly(other)
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.terms.get(k, 0.0) - other.terms.get(k, 0.0)) <= tol for k in keys)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            v = self.terms[key]
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(("nx", "ny", "nz"), key)
                if e > 0
            )
            bits.append(f"{v:+g}" + (f"*{mono}" if mono else ""))
        return "".join(bits)


def _as_poly(x) -> PolynomialObservable:
    if isinstance(x, PolynomialObservable):
        return x
    if np.isscalar(x):
        return PolynomialObservable.constant(float(x))
    raise InvariantViolation(f"cannot interpret {x!r} as a polynomial observable")


def _reduce_terms(terms: dict) -> dict:
    """Eliminate nz^2 via 1 - nx^2 - ny^2 and drop zero coefficients."""
    work = {tuple(int(e) for e in k): float(v) for k, v in terms.items()}
    out: dict = {}
    while work:
        (a, b, c), v = work.popitem()
        if v == 0.0:
            continue
        if min(a, b, c) < 0:
            raise InvariantViolation("monomial exponents must be nonnegative")
        if c >= 2:
            for key, w in (((a, b, c - 2), v), ((a + 2, b, c - 2), -v), ((a, b + 2, c - 2), -v)):
                work[key] = work.get(key, 0.0) + w
        else:
            out[(a, b, c)] = out.get((a, b, c), 0.0) + v
    return {k: v for k, v in out.items() if v != 0.0}


_TERM_RE = re.compile(r"^([+-]?\d*\.?\d*(?:[eE][+-]?\d+)?)?((?:\*?n[xyz](?:\^\d+)?)*)$")


def parse_polynomial(text: str) -> PolynomialObservable:
    """Parse ``2.5*nx^2*nz - ny`` style strings."""
    cleaned = text.replace(" ", "").replace("E", "e")
    if not cleaned:
        raise InvariantViolation("empty polynomial string")
    # protect exponent signs, then split on +/- that start a term
    guarded = cleaned.replace("e-", "\x01").replace("e+", "\x02")
    pieces = [
        p.replace("\x01", "e-").replace("\x02", "e+")
        for p in re.findall(r"[+-]?[^+-]+", guarded)
    ]
    result: dict = {}
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if not m:
            raise InvariantViolation(f"cannot parse polynomial term '{piece}'")
        coeff_txt, vars_txt = m.group(1), m.group(2)
        if coeff_txt in (None, "", "+", "-"):
            coeff = 1.0 if coeff_txt != "-" else -1.0
        else:
            coeff = float(coeff_txt)
        expo = [0, 0, 0]
        for var in re.findall(r"n[xyz](?:\^\d+)?", vars_txt or ""):
            if "^" in var:
                name, power = var.split("^")
                expo[_VAR_TO_AXIS[name]] += int(power)
            else:
                expo[_VAR_TO_AXIS[var]] += 1
        if coeff_txt in (None, "") and not vars_txt:
            raise InvariantViolation(f"cannot parse polynomial term '{piece}'")
        key = tuple(expo)
        result[key] = result.get(key, 0.0) + coeff
    return PolynomialObservable(result)


# ---------------------------------------------------------------------------
# coherent states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinLevel:
    """A quantization level: spin j stored as the integer 2j; hbar = 1/(j+1)."""

    two_j: int

    def __post_init__(self):
        if not isinstance(self.two_j, (int, np.integer)) or self.two_j < 1:
            raise InvariantViolation("two_j must be a positive integer")

    @property
    def j(self) -> float:
        return self.two_j / 2.0

    @property
    def hbar(self) -> float:
        return 2.0 / (self.two_j + 2)

    @property
    def dim(self) -> int:
        return self.two_j + 1


class SpherePoint:
    """A unit vector on S^2, carried both as angles and as a 3-vector."""

    __slots__ = ("theta", "phi", "vector")

    def __init__(self, theta: float, phi: float):
        self.theta = float(theta)
        self.phi = float(phi)
        st = np.sin(self.theta)
        self.vector = np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])

    @classmethod
    def from_vector(cls, v) -> "SpherePoint":
        v = np.asarray(v, dtype=float)
        norm = np.linalg.norm(v)
        if not norm > 0:
            raise InvariantViolation("zero vector does not define a sphere point")
        if abs(norm - 1.0) > 1e-9:
            raise InvariantViolation(f"vector norm {norm} is not 1 within 1e-9")
        v = v / norm
        return cls(np.arccos(np.clip(v[2], -1.0, 1.0)), np.arctan2(v[1], v[0]))

    def __repr__(self):
        return f"SpherePoint(theta={self.theta:.6f}, phi={self.phi:.6f})"


def coherent_amplitudes(two_j: int, theta, phi) -> np.ndarray:
    """Coherent-state components over a batch of directions.

    Index i = 0..2j corresponds to magnetic number m = j - i (descending);
    amplitude sqrt(C(2j,i)) cos^(2j-i)(theta/2) sin^i(theta/2) e^{-i m phi}.
    At phi = 0 every component is real and nonnegative (the repo-wide phase
    convention).
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))[:, None]
    phi = np.atleast_1d(np.asarray(phi, dtype=float))[:, None]
    i = np.arange(two_j + 1)
    root_binom = np.sqrt([float(comb(two_j, int(k))) for k in i])
    m = (two_j - 2 * i) / 2.0
    mag = root_binom * np.cos(theta / 2.0) ** (two_j - i) * np.sin(theta / 2.0) ** i
    return mag * np.exp(-1j * m * phi)


@dataclass
class CoherentState:
    level: SpinLevel
    point: SpherePoint
    amplitudes: np.ndarray

    def __post_init__(self):
        norm = np.linalg.norm(self.amplitudes)
        if abs(norm - 1.0) > 1e-9:
            raise InvariantViolation("coherent state must be unit-norm")


def coherent_state(level: SpinLevel, point: SpherePoint) -> CoherentState:
    amps = coherent_amplitudes(level.two_j, point.theta, point.phi)[0]
    return CoherentState(level, point, amps)


def transition_probability(s1: CoherentState, s2: CoherentState) -> float:
    """|<s1, s2>|^2; equals ((1 + n1.n2)/2)^(2j) in closed form."""
    if s1.level != s2.level:
        raise InvariantViolation("transition probability needs states at the same level")
    return float(np.abs(np.vdot(s1.amplitudes, s2.amplitudes)) ** 2)


def transition_closed_form(level: SpinLevel, p1: SpherePoint, p2: SpherePoint) -> float:
    c = float(np.dot(p1.vector, p2.vector))
    return ((1.0 + c) / 2.0) ** level.two_j


def spin_matrices(two_j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Standard spin matrices (Jx, Jy, Jz) in the m-descending basis."""
    j = two_j / 2.0
    m = j - np.arange(two_j + 1)
    jz = np.diag(m).astype(complex)
    # raising: J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; m+1 sits one index up
    raise_amp = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    jp = np.zeros((two_j + 1, two_j + 1), dtype=complex)
    jp[np.arange(two_j), np.arange(1, two_j + 1)] = raise_amp
    jm = jp.conj().T
    jx = (jp + jm) / 2.0
    jy = (jp - jm) / 2.0j
    return jx, jy, jz


# ---------------------------------------------------------------------------
# quantization
# ---------------------------------------------------------------------------


def _quadrature_grid(two_j: int, degree: int, gl_order=None, phi_points=None):
    L = gl_order if gl_order is not None else two_j + 2 * degree + 4
    nphi = phi_points if phi_points is not None else 2 * two_j + 4 * degree + 5
    u, w = leggauss(int(L))
    theta = np.arccos(u)
    phi = np.arange(int(nphi)) * (2.0 * np.pi / int(nphi))
    TH = np.repeat(theta, int(nphi))
    PH = np.tile(phi, int(L))
    WT = np.repeat(w, int(nphi)) * (2.0 * np.pi / int(nphi))
    return TH, PH, WT


def quantize(level: SpinLevel, f: PolynomialObservable, gl_order=None, phi_points=None) -> np.ndarray:
    """Coherent-state quantization of a polynomial observable.

    Returns the Hermitian (2j+1)x(2j+1) matrix of
    ((2j+1)/4pi) * integral f(n) |n><n|; the default quadrature orders are
    exact for the polynomial integrand, so the only error is roundoff.
    """
    f = _as_poly(f)
    th, ph, wt = _quadrature_grid(level.two_j, f.degree(), gl_order, phi_points)
    amps = coherent_amplitudes(level.two_j, th, ph)
    pts = np.stack(
        [np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1
    )
    fvals = f.evaluate(pts)
    weights = wt * fvals * (level.dim / (4.0 * np.pi))
    q = np.einsum("p,pi,pj->ij", weights, amps, amps.conj())
    return (q + q.conj().T) / 2.0   # symmetrize away roundoff asymmetry


def sphere_sup_grid(n_theta: int = 101, n_phi: int = 100) -> np.ndarray:
    """Dense product grid including both poles, for sup-norm estimation."""
    theta = np.linspace(0.0, np.pi, n_theta)
    phi = np.arange(n_phi) * (2.0 * np.pi / n_phi)
    TH = np.repeat(theta, n_phi)
    PH = np.tile(phi, n_theta)
    return np.stack([np.sin(TH) * np.cos(PH), np.sin(TH) * np.sin(PH), np.cos(TH)], axis=-1)


def sup_abs(f: PolynomialObservable, grid: np.ndarray | None = None) -> float:
    grid = sphere_sup_grid() if grid is None else grid
    return float(np.max(np.abs(f.evaluate(grid))))


def strict_quantization_report(
    f: PolynomialObservable,
    g: PolynomialObservable,
    levels,
    gl_order=None,
    phi_points=None,
) -> list[dict]:
    """Per-level strict-quantization defects for a pair of observables.

    Rows carry:
      dirac_defect  = || i[Q(f),Q(g)]/hbar - Q({f,g}) ||
      jordan_defect = || (Q(f)Q(g)+Q(g)Q(f))/2 - Q(f*g) ||
      norm_defect   = | ||Q(f)|| - sup|f| |   (sup over a dense grid)
    """
    levels = list(levels)
    if not levels:
        raise InvariantViolation("need at least one level")
    f, g = _as_poly(f), _as_poly(g)
    bracket = f.poisson_bracket(g)
    prod = f * g
    grid = sphere_sup_grid()
    supf = sup_abs(f, grid)
    rows = []
    for level in levels:
        if not isinstance(level, SpinLevel):
            level = SpinLevel(int(level))
        qf = quantize(level, f, gl_order, phi_points)
        qg = quantize(level, g, gl_order, phi_points)
        qb = quantize(level, bracket, gl_order, phi_points)
        qp = quantize(level, prod, gl_order, phi_points)
        dirac = operator_norm(lie_bracket(qf, qg, level.hbar) - qb)
        jordan_defect = operator_norm(jordan(qf, qg) - qp)
        norm_defect = abs(operator_norm(qf) - supf)
        rows.append(
            {
                "two_j": level.two_j,
                "hbar": level.hbar,
                "dirac_defect": dirac,
                "jordan_defect": jordan_defect,
                "norm_defect": norm_defect,
            }
        )
    return rows


def classical_limit_check(point_pairs, levels) -> list[dict]:
    """Transition probabilities against the classical limit, per pair and level."""
    rows = []
    for level in levels:
        if not isinstance(level, SpinLevel):
            level = SpinLevel(int(level))
        for idx, (p1, p2) in enumerate(point_pairs):
            s1 = coherent_state(level, p1)
            s2 = coherent_state(level, p2)
            p = transition_probability(s1, s2)
            rows.append(
                {
                    "two_j": level.two_j,
                    "pair": idx,
                    "cos_angle": float(np.dot(p1.vector, p2.vector)),
                    "p": p,
                    "closed_form": transition_closed_form(level, p1, p2),
                }
            )
    return rows
