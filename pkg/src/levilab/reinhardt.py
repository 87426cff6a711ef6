"""Normalized forms of hyperbolic Reinhardt domains: signature shapes, the
dimension count of the identity component of the automorphism group, the
case analysis that leads to the unbounded model domain, and the Cauchy
integral estimate showing bounded holomorphic functions on that model are
independent of the fibre variable.

Block types and their real parameter counts in the normalized form:

  * "ball"     block of size m: fractional-linear (A,b;c,d) in SU(m,1),
                dimension (m+1)^2 - 1;
  * "affine"   block of size m: z -> Bz + e with B in U(m), e in C^m,
                dimension m^2 + 2m;
  * "rotation" block of size m: z -> Cz with C in U(m), dimension m^2.

A signature is (s, t, p) with 0 <= s <= t <= p <= n and an ordered block
size composition n_1 + ... + n_p = n; blocks 1..s are "ball", s+1..t are
"affine", t+1..p are "rotation".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = [
    "NormalizedSignature",
    "DimReport",
    "ModelDomain",
    "CaseRecord",
    "enumerate_signatures",
    "dim_aut0",
    "achievable_dims",
    "lemma_a_cases",
    "resolve_disc_case",
    "cauchy_radius",
    "cauchy_bound",
    "cauchy_derivative_numeric",
    "decay_scan",
]

BLOCK_KINDS = ("ball", "affine", "rotation")


@dataclass(frozen=True)
class NormalizedSignature:
    n: int
    s: int
    t: int
    p: int
    blocks: tuple[int, ...]
    # exponent data of the normalized form; left unset by shape enumeration
    alpha_exponents: tuple = ()
    beta_exponents: tuple = ()

    def __post_init__(self):
        if not (0 <= self.s <= self.t <= self.p <= self.n):
            raise ValueError(f"invalid (s,t,p)=({self.s},{self.t},{self.p}) for n={self.n}")
        if len(self.blocks) != self.p or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be p sizes >= 1")
        if sum(self.blocks) != self.n:
            raise ValueError("block sizes must sum to n")

    def block_kind(self, i: int) -> str:
        if i < self.s:
            return "ball"
        if i < self.t:
            return "affine"
        return "rotation"


def _compositions(n: int, p: int):
    """Ordered compositions of n into p positive parts."""
    for cuts in combinations(range(1, n), p - 1):
        prev = 0
        parts = []
        for c in (*cuts, n):
            parts.append(c - prev)
            prev = c
        yield tuple(parts)


def enumerate_signatures(n: int) -> list[NormalizedSignature]:
    """All (s, t, p, block-size) shapes, lexicographically ordered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for p in range(1, n + 1):
        for s in range(p + 1):
            for t in range(s, p + 1):
                for blocks in _compositions(n, p):
                    out.append(NormalizedSignature(n, s, t, p, blocks))
    out.sort(key=lambda g: (g.s, g.t, g.p, g.blocks))
    return out


@dataclass(frozen=True)
class DimReport:
    signature: NormalizedSignature
    contributions: tuple[tuple[int, str, int, int], ...]  # (index, kind, size, dim)
    total: int


def _block_dim(kind: str, m: int) -> int:
    if kind == "ball":
        return (m + 1) ** 2 - 1
    if kind == "affine":
        return m * m + 2 * m
    return m * m


def dim_aut0(sig: NormalizedSignature) -> DimReport:
    """Raw real parameter count of the normalized-form group."""
    contrib = []
    for i, m in enumerate(sig.blocks):
        kind = sig.block_kind(i)
        contrib.append((i, kind, m, _block_dim(kind, m)))
    return DimReport(sig, tuple(contrib), sum(c[3] for c in contrib))


def achievable_dims(n: int) -> set[int]:
    """All parameter-count values over the signature shapes for dimension n."""
    return {dim_aut0(sig).total for sig in enumerate_signatures(n)}


# ---------------------------------------------------------------------------
# the unbounded model domain and its case analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModelDomain:
    """{|z1| < 1, |z2| < R / (1 - |z1|^2)^gamma} with R, gamma > 0."""

    R: float
    gamma: float

    def __post_init__(self):
        if not (self.R > 0 and self.gamma > 0):
            raise ValueError("R and gamma must be positive")

    def contains(self, z1: complex, z2: complex) -> bool:
        a1 = abs(z1)
        if a1 >= 1.0:
            return False
        return abs(z2) * (1.0 - a1 * a1) ** self.gamma < self.R

    def contains_batch(self, points: np.ndarray) -> np.ndarray:
        a1 = np.abs(points[:, 0])
        ok = a1 < 1.0
        shrink = np.where(ok, 1.0 - a1 * a1, 1.0) ** self.gamma
        val = np.abs(points[:, 1]) * np.where(ok, shrink, np.inf)
        return ok & (val < self.R)

    def fibre_radius(self, z1: complex) -> float:
        a1 = abs(z1)
        if a1 >= 1.0:
            raise ValueError("|z1| must be < 1")
        return self.R / (1.0 - a1 * a1) ** self.gamma


@dataclass(frozen=True)
class CaseRecord:
    case: str
    base_region: str
    conditions: str
    verdict: str
    supplied: bool = False   # verdict recorded from the source argument, not re-derived
    model: ModelDomain | None = None


def lemma_a_cases() -> tuple[CaseRecord, ...]:
    """The case table for a noncompact identity component in dimension 2."""
    return (
        CaseRecord("reduction", "p = t, s < t", "t > 0", "non-hyperbolic", supplied=True),
        CaseRecord(
            "reduction", "p = t, s = t", "t > 0",
            "ball-or-polydisc-pseudoconvex", supplied=True,
        ),
        CaseRecord("i", "punctured disc 0 < |z2| < R", "R finite", "not-simply-connected"),
        CaseRecord("ii", "annulus r < |z2| < R", "0 < r < R <= inf", "not-simply-connected"),
        CaseRecord("iii", "disc |z2| < R", "s = 0", "not-hyperbolic-contains-line"),
        CaseRecord("iii", "disc |z2| < R", "s = 1, exponent >= 0", "pseudoconvex"),
        CaseRecord("iii", "disc |z2| < R", "s = 1, exponent < 0", "model-domain"),
    )


def resolve_disc_case(s: int, exponent: float, R: float = 1.0) -> CaseRecord:
    """Concrete resolution of the disc case for given s and exponent value."""
    if s == 0:
        return CaseRecord("iii", "disc", "s = 0", "not-hyperbolic-contains-line")
    if exponent >= 0:
        return CaseRecord("iii", "disc", f"s = 1, exponent = {exponent}", "pseudoconvex")
    return CaseRecord(
        "iii", "disc", f"s = 1, exponent = {exponent}", "model-domain",
        model=ModelDomain(R, -exponent),
    )


# ---------------------------------------------------------------------------
# Cauchy estimate machinery
# ---------------------------------------------------------------------------


def cauchy_radius(R: float, gamma: float, mu: complex) -> float:
    """Half the fibre radius over mu: R / (2 (1 - |mu|^2)^gamma)."""
    a = abs(mu)
    if a >= 1.0:
        raise ValueError("|mu| must be < 1")
    return R / (2.0 * (1.0 - a * a) ** gamma)


def cauchy_bound(M: float, R: float, gamma: float, mu: complex, rho_abs: float) -> float:
    """M * R_mu / (R_mu - |rho|)^2 for the derivative in the fibre direction."""
    if M <= 0:
        raise ValueError("M must be positive")
    if rho_abs < 0:
        raise ValueError("rho_abs must be nonnegative")
    r_mu = cauchy_radius(R, gamma, mu)
    if r_mu <= rho_abs:
        raise ValueError(f"R_mu = {r_mu} does not exceed |rho| = {rho_abs}")
    return M * r_mu / (r_mu - rho_abs) ** 2


def cauchy_derivative_numeric(f, mu: complex, rho: complex, radius: float, nodes: int = 512) -> complex:
    """df/dz2 at (mu, rho) via the squared-kernel contour integral.

    Trapezoidal quadrature of (1/2 pi i) * integral of f(mu, zeta)/(zeta-rho)^2
    over |zeta| = radius; spectrally accurate for f holomorphic past the circle.
    """
    if abs(rho) >= radius:
        raise ValueError("|rho| must be < radius")
    ang = 2.0 * np.pi * np.arange(nodes) / nodes
    zeta = radius * np.exp(1j * ang)
    vals = np.asarray([f(mu, z) for z in zeta], dtype=np.complex128)
    return complex(np.mean(vals * zeta / (zeta - rho) ** 2))


def decay_scan(M: float, R: float, gamma: float, mus, rho_abs: float) -> dict:
    """Bound table along a sequence |mu| -> 1; asserts strict decrease."""
    rows = []
    for mu in mus:
        rows.append(
            {
                "abs_mu": abs(mu),
                "R_mu": cauchy_radius(R, gamma, mu),
                "bound": cauchy_bound(M, R, gamma, mu, rho_abs),
            }
        )
    bounds = [r["bound"] for r in rows]
    decreasing = all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))
    return {
        "rows": rows,
        "strictly_decreasing": decreasing,
        "final_over_initial": bounds[-1] / bounds[0] if bounds else None,
    }
