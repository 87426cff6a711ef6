"""Boundary geometry of domains {rho < 0}.

Gradients and Levi matrices come from exact Wirtinger differentiation of the
defining expression; the per-sample number crunching runs through the batch
kernels.  Conventions:

  * gradient g_j = d(rho)/dz_j;
  * the complex tangent space at p is {v : sum_j v_j g_j = 0};
  * reported eigenvalues are those of the Levi matrix restricted to an
    orthonormal basis of the tangent space (no gradient rescaling);
  * canonical_tangent_levi (n = 2) instead plugs in v = (-g_2/g_1, 1), the
    normalization under which the slit-quartic model attains the value -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import AlgebraError, HermitianExpr, constant
from .fasteval import compile_expr
from .rationals import GR, GaussianRational

__all__ = [
    "DomainSpec",
    "LeviReport",
    "InvarianceLattice",
    "StratificationReport",
    "LocusSpec",
    "SampleResult",
    "complex_gradient",
    "levi_matrix",
    "levi_restricted",
    "canonical_tangent_levi",
    "levi_batch",
    "sample_boundary",
    "interior_samples",
    "stratify",
    "pseudoconvexity_scan",
    "gradient_nonvanishing_scan",
    "torus_invariance_lattice",
    "integer_kernel",
    "boundedness_evidence",
]

RANK_TOL = 1e-8
BOUNDARY_TOL = 1e-10
LOCUS_TOL = 1e-6
BAD_POINT_RADIUS = 1e-3


# ---------------------------------------------------------------------------
# domain specification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DomainSpec:
    """A domain {rho < 0} with an interior anchor for ray sampling."""

    n: int
    rho: HermitianExpr
    name: str
    interior_anchor: tuple[complex, ...]
    known_bad_points: tuple[tuple[complex, ...], ...] = ()
    bad_point_radius: float = BAD_POINT_RADIUS

    def __post_init__(self):
        if self.rho.n != self.n:
            raise AlgebraError("rho dimension does not match the domain")
        if not self.rho.is_real():
            raise AlgebraError("defining function must be real-valued")
        object.__setattr__(
            self, "interior_anchor", tuple(complex(z) for z in self.interior_anchor)
        )
        object.__setattr__(
            self,
            "known_bad_points",
            tuple(tuple(complex(z) for z in p) for p in self.known_bad_points),
        )
        v = self.rho.evaluate(self.interior_anchor, strict=False)
        if not v.real < 0:
            raise AlgebraError(f"anchor {self.interior_anchor} is not interior (rho={v})")

    def rho_at(self, points: np.ndarray) -> np.ndarray:
        return compile_expr(self.rho)(points).real


@lru_cache(maxsize=64)
def _derivative_programs(rho: HermitianExpr):
    n = rho.n
    grads = [rho.wirtinger(j, "holo") for j in range(n)]
    grad_progs = tuple(compile_expr(g) for g in grads)
    levi_progs = tuple(
        tuple(compile_expr(grads[j].wirtinger(k, "anti")) for k in range(n))
        for j in range(n)
    )
    return grad_progs, levi_progs


# ---------------------------------------------------------------------------
# pointwise reports
# ---------------------------------------------------------------------------


@dataclass
class LeviReport:
    point: tuple[complex, ...]
    rho_value: float
    grad: np.ndarray
    levi_matrix: np.ndarray
    tangent_basis: np.ndarray          # columns span the complex tangent space
    restricted_eigenvalues: np.ndarray  # ascending
    rank: int
    signature: tuple[int, int, int]     # (pos, neg, zero)

    def to_dict(self) -> dict:
        return {
            "point": [[z.real, z.imag] for z in self.point],
            "rho_value": self.rho_value,
            "grad": [[z.real, z.imag] for z in self.grad],
            "levi_matrix": [[[z.real, z.imag] for z in row] for row in self.levi_matrix],
            "restricted_eigenvalues": [float(v) for v in self.restricted_eigenvalues],
            "rank": self.rank,
            "signature": list(self.signature),
        }


def complex_gradient(domain: DomainSpec, point) -> np.ndarray:
    """(d rho/dz_1, ..., d rho/dz_n) at the point."""
    pt = tuple(complex(z) for z in point)
    grad_progs, _ = _derivative_programs(domain.rho)
    arr = np.asarray(pt, dtype=np.complex128)[None, :]
    return np.array([p(arr)[0] for p in grad_progs])


def levi_matrix(domain: DomainSpec, point) -> np.ndarray:
    pt = np.asarray([complex(z) for z in point], dtype=np.complex128)[None, :]
    _, levi_progs = _derivative_programs(domain.rho)
    n = domain.n
    L = np.empty((n, n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            L[j, k] = levi_progs[j][k](pt)[0]
    return L


def _tangent_onb(grad: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of {v : sum v_j grad_j = 0}."""
    n = grad.size
    w = np.conj(grad)
    nw = np.linalg.norm(w)
    if nw == 0:
        raise AlgebraError("degenerate gradient: tangent space undefined")
    v = w / nw
    u = v.copy()
    phase = v[0] / abs(v[0]) if abs(v[0]) > 1e-300 else 1.0
    u[0] += phase
    u /= np.linalg.norm(u)
    H = np.eye(n, dtype=np.complex128) - 2.0 * np.outer(u, np.conj(u))
    return H[:, 1:]


def _restrict(L: np.ndarray, T: np.ndarray) -> np.ndarray:
    # form(v) = sum_jk L_jk v_j conj(v_k); restricted matrix on the columns of T
    return T.T @ L @ np.conj(T)


def _rank_from_eigs(eigs: np.ndarray):
    scale = 1.0 + (np.max(np.abs(eigs)) if eigs.size else 0.0)
    tol = RANK_TOL * scale
    pos = int(np.sum(eigs > tol))
    neg = int(np.sum(eigs < -tol))
    zero = eigs.size - pos - neg
    return pos + neg, (pos, neg, zero)


def levi_restricted(
    domain: DomainSpec, point, boundary_tol: float = 1e-8
) -> LeviReport:
    """Full Levi report at a boundary point with nonvanishing gradient."""
    pt = tuple(complex(z) for z in point)
    rho_val = domain.rho.evaluate(pt, strict=False).real
    if abs(rho_val) > boundary_tol:
        raise AlgebraError(f"point is not on the boundary (rho={rho_val})")
    grad = complex_gradient(domain, pt)
    if np.linalg.norm(grad) < 1e-12:
        raise AlgebraError("degenerate gradient at the point")
    L = levi_matrix(domain, pt)
    T = _tangent_onb(grad)
    M = _restrict(L, T)
    eigs = np.linalg.eigvalsh(M)
    rank, sig = _rank_from_eigs(eigs)
    return LeviReport(pt, rho_val, grad, L, T, eigs, rank, sig)


def canonical_tangent_levi(domain: DomainSpec, point) -> float:
    """Levi form on v = (-rho_{z2}/rho_{z1}, 1); n = 2 only."""
    if domain.n != 2:
        raise AlgebraError("canonical tangent vector is defined for n = 2 only")
    pt = tuple(complex(z) for z in point)
    grad = complex_gradient(domain, pt)
    if abs(grad[0]) < 1e-14:
        raise AlgebraError("rho_{z1} vanishes; canonical tangent undefined")
    v = np.array([-grad[1] / grad[0], 1.0 + 0j])
    L = levi_matrix(domain, pt)
    return float(np.real(v @ L @ np.conj(v)))


# ---------------------------------------------------------------------------
# batched derivatives over sample arrays
# ---------------------------------------------------------------------------


def levi_batch(domain: DomainSpec, points: np.ndarray):
    """Gradients, Levi matrices and restricted eigenvalues for many points.

    Returns (grads (N,n), levi (N,n,n), eigs (N,n-1)) with eigenvalues
    ascending per point.
    """
    Z = np.ascontiguousarray(points, dtype=np.complex128)
    N, n = Z.shape
    grad_progs, levi_progs = _derivative_programs(domain.rho)
    G = np.empty((N, n), dtype=np.complex128)
    for j in range(n):
        G[:, j] = grad_progs[j](Z)
    L = np.empty((N, n, n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            L[:, j, k] = levi_progs[j][k](Z)
    W = np.conj(G)
    norms = np.linalg.norm(W, axis=1)
    if np.any(norms < 1e-12):
        raise AlgebraError("degenerate gradient among the sample points")
    V = W / norms[:, None]
    absv0 = np.abs(V[:, 0])
    phase = np.where(absv0 > 1e-300, V[:, 0] / np.where(absv0 > 0, absv0, 1.0), 1.0)
    U = V.copy()
    U[:, 0] += phase
    U /= np.linalg.norm(U, axis=1)[:, None]
    H = np.eye(n, dtype=np.complex128)[None, :, :] - 2.0 * U[:, :, None] * np.conj(U[:, None, :])
    T = H[:, :, 1:]
    M = np.einsum("njr,njk,nks->nrs", T, L, np.conj(T))
    eigs = np.linalg.eigvalsh(M)
    return G, L, eigs


# ---------------------------------------------------------------------------
# boundary sampling
# ---------------------------------------------------------------------------


@dataclass
class SampleResult:
    points: np.ndarray
    misses: int                # rays that never exited within max_ray
    requested: int
    seed: int
    anchor: tuple[complex, ...]
    max_abs: float = 0.0

    def to_dict(self) -> dict:
        return {
            "count": int(self.points.shape[0]),
            "requested": self.requested,
            "misses": self.misses,
            "seed": self.seed,
            "max_abs": self.max_abs,
        }


def _unit_directions(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    raw = rng.normal(size=(count, 2 * n))
    raw /= np.linalg.norm(raw, axis=1)[:, None]
    return raw[:, :n] + 1j * raw[:, n:]


def sample_boundary(
    domain: DomainSpec,
    count: int,
    seed: int,
    anchor=None,
    max_ray: float = 64.0,
    bisect_steps: int = 50,
    max_batches: int = 64,
) -> SampleResult:
    """Boundary points found by bisecting along random rays from the anchor.

    Deterministic for a given seed.  Rays that never exit within max_ray are
    counted as misses (evidence of unboundedness), not errors.  Samples within
    bad_point_radius of a known bad point are dropped and replaced.
    """
    anchor = np.asarray(
        anchor if anchor is not None else domain.interior_anchor, dtype=np.complex128
    )
    prog = compile_expr(domain.rho)
    rng = np.random.default_rng(seed)
    collected: list[np.ndarray] = []
    total = 0
    misses = 0
    batches = 0
    while total < count and batches < max_batches:
        batches += 1
        m = max(count - total, 1)
        dirs = _unit_directions(rng, m, domain.n)
        t_lo = np.zeros(m)
        t_hi = np.ones(m)
        # expand until rho >= 0 (bracket) or the ray is declared non-exiting
        active = np.ones(m, dtype=bool)
        for _ in range(int(np.ceil(np.log2(max_ray))) + 1):
            if not active.any():
                break
            pts = anchor[None, :] + t_hi[active, None] * dirs[active]
            vals = prog(pts).real
            sub = vals < 0
            idx = np.flatnonzero(active)
            grow = idx[sub]
            t_lo[grow] = t_hi[grow]
            t_hi[grow] *= 2.0
            active[idx[~sub]] = False
            active[t_hi > max_ray] = False
        bracketed = (t_hi <= max_ray) & ~active
        missed = ~bracketed
        misses += int(np.sum(missed))
        if not bracketed.any():
            continue
        lo = t_lo[bracketed]
        hi = t_hi[bracketed]
        d = dirs[bracketed]
        for _ in range(bisect_steps):
            mid = 0.5 * (lo + hi)
            vals = prog(anchor[None, :] + mid[:, None] * d).real
            inside = vals < 0
            lo = np.where(inside, mid, lo)
            hi = np.where(inside, hi, mid)
        pts = anchor[None, :] + hi[:, None] * d
        if domain.known_bad_points:
            keep = np.ones(pts.shape[0], dtype=bool)
            for bad in domain.known_bad_points:
                dist = np.linalg.norm(pts - np.asarray(bad)[None, :], axis=1)
                keep &= dist > domain.bad_point_radius
            pts = pts[keep]
        collected.append(pts)
        total += pts.shape[0]
    points = (
        np.concatenate(collected)[:count]
        if collected
        else np.zeros((0, domain.n), dtype=np.complex128)
    )
    max_abs = float(np.max(np.abs(points))) if points.size else 0.0
    return SampleResult(points, misses, count, seed, tuple(anchor), max_abs)


def interior_samples(domain: DomainSpec, count: int, seed: int, anchor=None) -> np.ndarray:
    """Strictly interior points: random contraction of boundary samples."""
    res = sample_boundary(domain, count, seed, anchor=anchor)
    rng = np.random.default_rng(seed + 0x5EED)
    anchor_arr = np.asarray(
        anchor if anchor is not None else domain.interior_anchor, dtype=np.complex128
    )
    scale = rng.uniform(0.0, 0.999, size=res.points.shape[0])
    pts = anchor_arr[None, :] + scale[:, None] * (res.points - anchor_arr[None, :])
    vals = domain.rho_at(pts)
    return pts[vals < 0]


# ---------------------------------------------------------------------------
# stratification and scans
# ---------------------------------------------------------------------------


@dataclass
class LocusSpec:
    """A closed-form membership test for a locus of given Levi rank."""

    name: str
    rank: int
    test: callable  # (points (N,n)) -> bool array
    tolerance: float = LOCUS_TOL


@dataclass
class StratificationReport:
    total: int
    rank_counts: dict[int, int]
    representatives: dict[int, tuple[complex, ...]]
    witnesses: list[dict]
    min_eigenvalue: float
    min_eigenvalue_point: tuple[complex, ...] | None

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "rank_counts": {str(k): v for k, v in sorted(self.rank_counts.items())},
            "witnesses": self.witnesses,
            "min_eigenvalue": self.min_eigenvalue,
        }


def stratify(domain: DomainSpec, points: np.ndarray, loci: list[LocusSpec]) -> StratificationReport:
    """Rank every sample; deficient-rank samples must land on a known locus."""
    N = points.shape[0]
    _, _, eigs = levi_batch(domain, points)
    scale = 1.0 + np.max(np.abs(eigs), axis=1, initial=0.0)
    tol = RANK_TOL * scale
    nz = np.abs(eigs) >= tol[:, None]
    ranks = np.sum(nz, axis=1)
    full = eigs.shape[1]
    rank_counts: dict[int, int] = {}
    representatives: dict[int, tuple[complex, ...]] = {}
    for r in np.unique(ranks):
        idx = np.flatnonzero(ranks == r)
        rank_counts[int(r)] = int(idx.size)
        representatives[int(r)] = tuple(points[idx[0]])
    witnesses = []
    deficient = np.flatnonzero(ranks < full)
    if deficient.size:
        covered = np.zeros(deficient.size, dtype=bool)
        for locus in loci:
            applies = ranks[deficient] == locus.rank
            if not applies.any():
                continue
            hit = locus.test(points[deficient])
            covered |= applies & hit
        for i, idx in enumerate(deficient):
            if not covered[i]:
                witnesses.append(
                    {
                        "point": [[z.real, z.imag] for z in points[idx]],
                        "rank": int(ranks[idx]),
                        "eigenvalues": [float(v) for v in eigs[idx]],
                    }
                )
    imin = int(np.argmin(eigs[:, 0])) if N else 0
    return StratificationReport(
        total=N,
        rank_counts=rank_counts,
        representatives=representatives,
        witnesses=witnesses,
        min_eigenvalue=float(eigs[:, 0].min()) if N else 0.0,
        min_eigenvalue_point=tuple(points[imin]) if N else None,
    )


def pseudoconvexity_scan(domain: DomainSpec, points: np.ndarray):
    """Minimum restricted Levi eigenvalue over the samples and its witness.

    For n = 2, also reports the minimum of the canonical-tangent value (the
    normalization in which the slit-quartic model shows -1)."""
    _, L, eigs = levi_batch(domain, points)
    i = int(np.argmin(eigs[:, 0]))
    out = {
        "min_eigenvalue": float(eigs[:, 0].min()),
        "witness": tuple(points[i]),
        "samples": int(points.shape[0]),
    }
    if domain.n == 2:
        grad_progs, _ = _derivative_programs(domain.rho)
        g1 = grad_progs[0](points)
        g2 = grad_progs[1](points)
        ok = np.abs(g1) > 1e-12
        v1 = np.where(ok, -g2 / np.where(ok, g1, 1.0), 0.0)
        V = np.stack([v1, np.ones_like(v1)], axis=1)
        vals = np.real(np.einsum("nj,njk,nk->n", V, L, np.conj(V)))
        vals = vals[ok]
        if vals.size:
            j = int(np.argmin(vals))
            out["min_canonical"] = float(vals.min())
            out["canonical_witness"] = tuple(points[ok][j])
    return out


def gradient_nonvanishing_scan(domain: DomainSpec, points: np.ndarray):
    """Smoothness evidence: min |grad rho| over the samples."""
    grad_progs, _ = _derivative_programs(domain.rho)
    G = np.stack([p(points) for p in grad_progs], axis=1)
    norms = np.linalg.norm(G, axis=1)
    i = int(np.argmin(norms))
    return {"min_grad_norm": float(norms[i]), "witness": tuple(points[i])}


# ---------------------------------------------------------------------------
# torus invariance lattice
# ---------------------------------------------------------------------------


@dataclass
class InvarianceLattice:
    rank: int
    basis: tuple[tuple[int, ...], ...]
    witness_violations: tuple[dict, ...]   # monomials with alpha != beta
    is_reinhardt: bool
    is_circular: bool

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "basis": [list(v) for v in self.basis],
            "is_reinhardt": self.is_reinhardt,
            "is_circular": self.is_circular,
            "witness_violations": list(self.witness_violations),
        }


def integer_kernel(rows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {v : row . v = 0 for all rows} via RREF."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        from math import gcd, lcm

        denom = lcm(*(x.denominator for x in v)) if v else 1
        ints = [int(x * denom) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        lead = next((x for x in ints if x), 1)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def torus_invariance_lattice(source: "DomainSpec | HermitianExpr") -> InvarianceLattice:
    """Integer kernel of the (alpha - beta) rows of a polynomial rho.

    rank n means the domain is Reinhardt in the given coordinates; a lattice
    containing (1, ..., 1) means it is circular.  Radical-bearing defining
    functions are refused (no exact lattice available).
    """
    rho = source.rho if isinstance(source, DomainSpec) else source
    if not rho.is_polynomial():
        raise AlgebraError("exact lattice requires a polynomial defining function")
    n = rho.n
    rows = []
    witnesses = []
    for alpha, beta, coeff in rho.monomial_items():
        d = tuple(a - b for a, b in zip(alpha, beta))
        if any(d):
            rows.append(d)
            witnesses.append({"alpha": list(alpha), "beta": list(beta), "coeff": str(coeff)})
    uniq = sorted(set(rows))
    basis = integer_kernel(uniq, n)
    circular = all(sum(row) == 0 for row in uniq)
    return InvarianceLattice(
        rank=len(basis),
        basis=tuple(basis),
        witness_violations=tuple(witnesses),
        is_reinhardt=len(basis) == n,
        is_circular=circular,
    )


# ---------------------------------------------------------------------------
# boundedness
# ---------------------------------------------------------------------------


def _syntactic_nonneg(piece: HermitianExpr) -> str | None:
    """A reason string if the piece is syntactically nonnegative, else None.

    Recognized shapes: a single term c*z^a*conj(z)^a with paired radicals and
    c > 0 (a modulus power), or c * R^2 (* paired radicals) with R real.
    """
    if len(piece.terms) == 1:
        t = piece.terms[0]
        if (
            t.alpha == t.beta
            and all(p2 == q2 for _, p2, q2 in t.radicals)
            and t.coeff.is_positive_real()
        ):
            return "modulus-power"
    return None


def boundedness_evidence(
    domain: DomainSpec,
    certificate: list[dict] | None = None,
    samples: int = 0,
    seed: int = 0,
) -> dict:
    """Certificate mode verifies rho + c = sum of syntactically nonnegative
    pieces and derives per-coordinate bounds; sampling mode reports the max
    modulus over boundary samples together with non-exiting rays."""
    if certificate is not None:
        c = -domain.rho.constant_term()
        if not c.is_positive_real():
            raise AlgebraError("certificate mode expects rho with negative constant term")
        total = constant(-c, domain.n)
        pieces = []
        for item in certificate:
            if "expr" in item:
                piece = item["expr"]
            else:  # scaled square with optional paired radical
                factor = item["factor"]
                if not factor.is_real():
                    raise AlgebraError("square certificate factor is not real-valued")
                scale = item.get("scale", GR(1))
                scale = scale if isinstance(scale, GaussianRational) else GR(scale)
                if not scale.is_positive_real():
                    raise AlgebraError("square certificate scale must be positive")
                piece = scale * factor * factor
                for base, p2 in item.get("paired_radicals", ()):
                    piece = piece.mul_radical(base, p2, p2)
            reason = _syntactic_nonneg(piece) or (
                "scaled-square" if "factor" in item else None
            )
            if reason is None:
                raise AlgebraError("certificate piece is not syntactically nonnegative")
            pieces.append((item.get("name", reason), piece, reason))
            total = total + piece
        if not (total - domain.rho).is_zero_identity():
            raise AlgebraError("certificate does not sum to rho + c")
        box: dict[int, float] = {}
        for name, piece, reason in pieces:
            if len(piece.terms) != 1:
                continue
            t = piece.terms[0]
            if t.radicals or t.alpha != t.beta:
                continue
            support = [j for j, a in enumerate(t.alpha) if a]
            if len(support) != 1:
                continue
            j = support[0]
            k = t.alpha[j]
            bound = (float(c.re) / float(t.coeff.re)) ** (1.0 / (2 * k))
            box[j] = min(box.get(j, np.inf), bound)
        return {
            "mode": "certificate",
            "verdict": "bounded" if len(box) == domain.n else "partial",
            "pieces": [{"name": n_, "nonneg_reason": r} for n_, _, r in pieces],
            "box": {f"z{j + 1}": box[j] for j in sorted(box)},
        }
    res = sample_boundary(domain, samples, seed)
    # deterministic axis probes catch unbounded directions that random rays
    # are unlikely to align with exactly
    prog = compile_expr(domain.rho)
    anchor = np.asarray(domain.interior_anchor, dtype=np.complex128)
    open_axes = []
    for j in range(domain.n):
        for label, d in (
            (f"+Re z{j + 1}", 1.0), (f"-Re z{j + 1}", -1.0),
            (f"+Im z{j + 1}", 1.0j), (f"-Im z{j + 1}", -1.0j),
        ):
            t, exited = 1.0, False
            while t <= 64.0:
                p = anchor.copy()
                p[j] += t * d
                if prog(p[None, :])[0].real >= 0:
                    exited = True
                    break
                t *= 2.0
            if not exited:
                open_axes.append(label)
    unbounded = res.misses > 0 or bool(open_axes)
    return {
        "mode": "sampling",
        "verdict": "unbounded-directions" if unbounded else "no-exit-rays-found",
        "max_abs": res.max_abs,
        "misses": res.misses,
        "open_axis_directions": open_axes,
        "samples": int(res.points.shape[0]),
    }
