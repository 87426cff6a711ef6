"""Holomorphic map families with radical factors and their exact identities.

A map component is a holomorphic expression (which may carry negative or
half-integer powers of registered bases) times scalar prefactors k^(r/4) with
k an exact constant.  The quarter-unit prefactors are what families like

    z2 -> (1 - |a|^2)^(1/4) * z2 / (1 - conj(a) z1)^(1/2)

need; they must recombine to at least half-integer powers during a pullback,
otherwise the pullback is rejected (pairing violation).

A multiplier identity  rho_dst o F = m * rho_src  with m > 0 on the closure
certifies that F maps {rho_src < 0} into {rho_dst < 0} and boundary to
boundary.  Identities are verified exactly at rational parameter values and
cross-checked in floating point on parameter sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import (
    AlgebraError,
    BaseFactor,
    HermitianExpr,
    PairingError,
    constant,
)
from .fasteval import compile_expr
from .geometry import (
    DomainSpec,
    complex_gradient,
    interior_samples,
    sample_boundary,
)
from .rationals import GR, GaussianRational

__all__ = [
    "ScalarPower",
    "MapComponent",
    "BaseTransform",
    "RadicalMap",
    "identity_map",
    "pullback",
    "verify_base_transform",
    "multiplier_identity_check",
    "sign_preservation_scan",
    "OrbitReport",
    "orbit",
    "boundary_distance_estimate",
    "retraction_check",
    "gradient_identity_check",
    "aut_dimension_bookkeeping",
]


@dataclass(frozen=True)
class ScalarPower:
    """An exact constant raised to a quarter-integer power: k^(quarters/4)."""

    k: GaussianRational
    quarters: int

    def numeric(self) -> complex:
        if self.k.is_positive_real():
            return float(Fraction(self.k.re)) ** (self.quarters / 4.0)
        return complex(self.k) ** (self.quarters / 4.0)


@dataclass(frozen=True)
class MapComponent:
    body: HermitianExpr
    scalars: tuple[ScalarPower, ...] = ()

    def __post_init__(self):
        if not self.body.is_holomorphic():
            raise AlgebraError("map components must be holomorphic")

    def eval_batch(self, Z: np.ndarray) -> np.ndarray:
        v = compile_expr(self.body)(Z)
        for s in self.scalars:
            v = v * s.numeric()
        return v


@dataclass(frozen=True)
class BaseTransform:
    """Declared factorization  b o F = const * prod_j factor_j^power_j."""

    const: GaussianRational
    factors: tuple[tuple[BaseFactor, int], ...] = ()


@dataclass(frozen=True)
class RadicalMap:
    n_in: int
    n_out: int
    components: tuple[MapComponent, ...]
    base_transforms: dict[str, BaseTransform] = field(default_factory=dict)
    name: str = ""
    param: GaussianRational | None = None

    def __post_init__(self):
        if len(self.components) != self.n_out:
            raise AlgebraError("component count does not match n_out")
        for c in self.components:
            if c.body.n != self.n_in:
                raise AlgebraError("component dimension mismatch")

    def eval_batch(self, Z: np.ndarray) -> np.ndarray:
        Z = np.ascontiguousarray(Z, dtype=np.complex128)
        if Z.ndim == 1:
            Z = Z[None, :]
        out = np.empty((Z.shape[0], self.n_out), dtype=np.complex128)
        for j, comp in enumerate(self.components):
            out[:, j] = comp.eval_batch(Z)
        return out

    def __call__(self, point) -> tuple[complex, ...]:
        return tuple(self.eval_batch(np.asarray(point, dtype=np.complex128))[0])


def identity_map(n: int) -> RadicalMap:
    from .algebra import variable

    return RadicalMap(
        n, n, tuple(MapComponent(variable(j, n)) for j in range(n)), {}, name="identity"
    )


def _is_coordinate_identity(F: RadicalMap) -> bool:
    from .algebra import variable

    return F.n_in == F.n_out and all(
        not c.scalars and c.body == variable(j, F.n_in)
        for j, c in enumerate(F.components)
    )


# ---------------------------------------------------------------------------
# pullback
# ---------------------------------------------------------------------------


def _const_key(k: GaussianRational) -> str:
    return f"k[{k.re}{'+' if k.im >= 0 else ''}{k.im}i]"


def pullback(expr: HermitianExpr, F: RadicalMap) -> HermitianExpr:
    """expr o F as an expression in the source variables.

    Every quarter-power prefactor contributed by the components must combine,
    per term, to a rational or at worst half-integer power of the constant;
    an odd quarter left over raises PairingError.
    """
    if expr.n != F.n_out:
        raise AlgebraError("expression dimension does not match the map target")
    n = F.n_in
    out = HermitianExpr.zero(n)
    conj_bodies = [c.body.conjugate() for c in F.components]
    for term in expr.terms:
        piece = constant(term.coeff, n)
        quarters: dict[GaussianRational, list[int]] = {}

        def add_quarters(k, holo, anti):
            cur = quarters.setdefault(k, [0, 0])
            cur[0] += holo
            cur[1] += anti

        for j, a in enumerate(term.alpha):
            if a:
                piece = piece * F.components[j].body ** a
                for s in F.components[j].scalars:
                    add_quarters(s.k, s.quarters * a, 0)
        for j, b in enumerate(term.beta):
            if b:
                piece = piece * conj_bodies[j] ** b
                for s in F.components[j].scalars:
                    add_quarters(s.k, 0, s.quarters * b)
        for bid, p2, q2 in term.radicals:
            bt = F.base_transforms.get(bid)
            if bt is None:
                if _is_coordinate_identity(F):
                    bt = BaseTransform(GR(1), ((expr.bases[bid], 1),))
                else:
                    raise AlgebraError(
                        f"no declared transform for base {bid!r} under map {F.name!r}"
                    )
            add_quarters(bt.const, 2 * p2, 2 * q2)
            for bf, power in bt.factors:
                piece = piece.mul_radical(bf, p2 * power, q2 * power)
        mult = GR(1)
        for k, (hq, aq) in quarters.items():
            if k == GR(1):
                continue
            if hq % 4 == 0 and aq % 4 == 0:
                mult = mult * k ** (hq // 4) * k.conjugate() ** (aq // 4)
            elif k.is_real():
                tot = hq + aq
                if tot % 4 == 0:
                    mult = mult * k ** (tot // 4)
                elif tot % 2 == 0:
                    if not k.is_positive_real():
                        raise PairingError(
                            f"half-integer power of non-positive constant {k}"
                        )
                    cb = BaseFactor(_const_key(k), n, {(0,) * n: k})
                    piece = piece.mul_radical(cb, tot // 2, 0)
                else:
                    raise PairingError(
                        f"constant power {k}^({tot}/4) is unpaired under the map"
                    )
            else:
                raise PairingError(
                    f"constant power {k}^({hq}/4)*conj^({aq}/4) is unpaired"
                )
        out = out + mult * piece
    return out


def verify_base_transform(F: RadicalMap, base: BaseFactor) -> bool:
    """Check the declared factorization of base o F exactly."""
    from .algebra import Term

    bt = F.base_transforms[base.id]
    target = HermitianExpr(
        F.n_out, [Term(c, e, (0,) * F.n_out) for e, c in base.poly]
    )
    composed = pullback(target, F)
    claimed = constant(bt.const, F.n_in)
    for bf, power in bt.factors:
        claimed = claimed.mul_radical(bf, 2 * power, 0)
    return (composed - claimed).is_zero_identity()


# ---------------------------------------------------------------------------
# multiplier identities
# ---------------------------------------------------------------------------


def _syntactically_positive(m: HermitianExpr) -> bool:
    """True if m is a positive constant times paired base powers."""
    if len(m.terms) != 1:
        return False
    t = m.terms[0]
    return (
        t.coeff.is_positive_real()
        and not any(t.alpha)
        and not any(t.beta)
        and all(p2 == q2 for _, p2, q2 in t.radicals)
    )


def multiplier_identity_check(
    family,
    rho_src: HermitianExpr,
    rho_dst: HermitianExpr,
    multiplier,
    param_values,
    float_sweep: int = 0,
    sweep_seed: int = 0,
    sweep_domain: DomainSpec | None = None,
) -> dict:
    """Verify rho_dst o F_a - m_a * rho_src = 0 exactly at each parameter.

    family(a) -> RadicalMap and multiplier(a) -> HermitianExpr.  Passing
    float_sweep > 0 additionally spot-checks the identity in floating point
    at random interior points for random parameters in the unit disc.
    """
    records = []
    all_pass = True
    for a in param_values:
        F = family(a)
        m = multiplier(a)
        diff = pullback(rho_dst, F) - m * rho_src
        residuals = diff.zero_identity_residuals()
        ok = not residuals
        all_pass &= ok
        records.append(
            {
                "param": str(a),
                "exact_zero": ok,
                "multiplier_positive_form": _syntactically_positive(m),
                "residual_terms": sum(len(r.terms) for r in residuals),
            }
        )
    sweep = None
    if float_sweep and sweep_domain is not None:
        rng = np.random.default_rng(sweep_seed)
        pts = interior_samples(sweep_domain, 64, sweep_seed)
        worst = 0.0
        for _ in range(float_sweep):
            ar, ai = rng.uniform(-0.7, 0.7, size=2)
            a = GR(Fraction(ar).limit_denominator(997), Fraction(ai).limit_denominator(997))
            if a.abs2() >= 1:
                continue
            F = family(a)
            m = multiplier(a)
            lhs = compile_expr(pullback(rho_dst, F))(pts)
            rhs = compile_expr(m)(pts) * compile_expr(rho_src)(pts)
            scale = np.maximum(1.0, np.abs(rhs))
            worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale)))
        sweep = {"params": float_sweep, "max_rel_error": worst}
        all_pass &= worst < 1e-9
    return {"pass": bool(all_pass), "params": records, "float_sweep": sweep}


def sign_preservation_scan(
    F: RadicalMap,
    src: DomainSpec,
    dst: DomainSpec | HermitianExpr,
    samples: int,
    seed: int,
    boundary_tol: float = 1e-6,
) -> dict:
    """Interior samples must map to rho_dst < 0; boundary samples to
    |rho_dst| <= boundary_tol."""
    rho_dst = dst.rho if isinstance(dst, DomainSpec) else dst
    prog = compile_expr(rho_dst)
    inner = interior_samples(src, samples, seed)
    vals_in = prog(F.eval_batch(inner)).real
    bres = sample_boundary(src, samples, seed + 1)
    vals_bd = prog(F.eval_batch(bres.points)).real
    bad_in = inner[vals_in >= 0]
    bad_bd = bres.points[np.abs(vals_bd) > boundary_tol]
    return {
        "pass": bool(bad_in.shape[0] == 0 and bad_bd.shape[0] == 0),
        "interior_samples": int(inner.shape[0]),
        "interior_max": float(vals_in.max()) if vals_in.size else None,
        "boundary_samples": int(bres.points.shape[0]),
        "boundary_max_abs": float(np.max(np.abs(vals_bd))) if vals_bd.size else None,
        "interior_witnesses": [[ [z.real, z.imag] for z in p] for p in bad_in[:3]],
        "boundary_witnesses": [[ [z.real, z.imag] for z in p] for p in bad_bd[:3]],
    }


# ---------------------------------------------------------------------------
# orbits and retraction
# ---------------------------------------------------------------------------


def boundary_distance_estimate(
    domain: DomainSpec, point, probes: int = 8, seed: int = 0, max_ray: float = 64.0
) -> float:
    """Min over probe rays of the exit distance (an upper bound on the true
    distance); probes are the ascent direction conj(grad) plus random ones."""
    q = np.asarray(point, dtype=np.complex128)
    prog = compile_expr(domain.rho)
    dirs = []
    g = complex_gradient(domain, tuple(q))
    ng = np.linalg.norm(g)
    if ng > 1e-14:
        dirs.append(np.conj(g) / ng)
    rng = np.random.default_rng(seed)
    raw = rng.normal(size=(probes, 2 * domain.n))
    raw /= np.linalg.norm(raw, axis=1)[:, None]
    dirs.extend(raw[:, : domain.n] + 1j * raw[:, domain.n :])
    best = np.inf
    for d in dirs:
        lo, hi = 0.0, 1e-6
        while hi <= max_ray and prog((q + hi * d)[None, :])[0].real < 0:
            lo = hi
            hi *= 2.0
        if hi > max_ray:
            continue
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if prog((q + mid * d)[None, :])[0].real < 0:
                lo = mid
            else:
                hi = mid
        best = min(best, hi)
    return float(best)


@dataclass
class OrbitReport:
    params: list
    points: list[tuple[complex, ...]]
    distances: list[float]
    strictly_decreasing: bool
    limit_estimate: tuple[complex, ...]

    def to_dict(self) -> dict:
        return {
            "params": [str(a) for a in self.params],
            "points": [[[z.real, z.imag] for z in p] for p in self.points],
            "distances": self.distances,
            "strictly_decreasing": self.strictly_decreasing,
            "limit_estimate": [[z.real, z.imag] for z in self.limit_estimate],
        }


def orbit(family, domain: DomainSpec, p0, params, probe_seed: int = 0) -> OrbitReport:
    """Orbit points F_a(p0) with boundary-distance estimates per parameter."""
    if not domain.rho.evaluate(tuple(p0), strict=False).real < 0:
        raise AlgebraError("orbit base point must be interior")
    pts = []
    dists = []
    for a in params:
        F = family(a)
        q = F(tuple(p0))
        pts.append(q)
        dists.append(boundary_distance_estimate(domain, q, seed=probe_seed))
    decreasing = all(d2 < d1 for d1, d2 in zip(dists, dists[1:]))
    return OrbitReport(list(params), pts, dists, decreasing, pts[-1] if pts else tuple(p0))


def retraction_check(
    domain: DomainSpec, taus, samples: int, seed: int
) -> dict:
    """For interior p and every tau in the grid, (z1, tau*z2) stays interior."""
    if domain.n != 2:
        raise AlgebraError("retraction check implemented for n = 2")
    pts = interior_samples(domain, samples, seed)
    prog = compile_expr(domain.rho)
    worst = -np.inf
    witness = None
    for tau in taus:
        scaled = pts.copy()
        scaled[:, 1] *= tau
        vals = prog(scaled).real
        m = float(vals.max()) if vals.size else -np.inf
        if m > worst:
            worst = m
            witness = (float(tau), tuple(scaled[int(np.argmax(vals))]))
    return {
        "pass": bool(worst < 0),
        "samples": int(pts.shape[0]),
        "taus": [float(t) for t in taus],
        "max_rho": worst,
        "witness": None if worst < 0 else witness,
    }


# ---------------------------------------------------------------------------
# the boundary gradient identity of the slit-quartic domain
# ---------------------------------------------------------------------------


def gradient_identity_check(phi: HermitianExpr, base: BaseFactor) -> dict:
    """Verify (z1-1)*phi_z1 + (z2/2)*phi_z2 - 1 + conj(z1) = phi exactly.

    The two sides of the displayed boundary identity differ by exactly the
    defining function, so on {phi = 0} the identity holds; the check is that
    the residual (difference minus phi) normalizes to zero."""
    from .algebra import conj_variable, variable

    n = phi.n
    z2 = variable(1, n)
    w1 = conj_variable(0, n)
    lhs = phi.wirtinger(0, "holo").mul_radical(base, 2, 0)
    residual = lhs + GR(Fraction(1, 2)) * z2 * phi.wirtinger(1, "holo") - 1 + w1 - phi
    residuals = residual.zero_identity_residuals()
    return {
        "pass": not residuals,
        "residual_terms": sum(len(r.terms) for r in residuals),
        "residuals": [repr(r) for r in residuals][:4],
    }


# ---------------------------------------------------------------------------
# automorphism-group bookkeeping
# ---------------------------------------------------------------------------


def aut_dimension_bookkeeping(n: int = 3) -> dict:
    """Real parameter count of the identified automorphism group of the
    coupled-quartic circular domain in C^n (n >= 3).

    One disc parameter (2 real), the unitary factor on the first block of
    n - 2 coordinates ((n-2)^2 real), one shared phase on the last two
    coordinates (1 real); the discrete part (swap x sign) contributes the
    four connected components.  For n = 3 the total is 2 + 1 + 1 = 4.
    """
    if n < 3:
        raise ValueError("defined for n >= 3")
    inventory = {
        "disc_parameter": 2,
        "first_block_unitary": (n - 2) ** 2,
        "tail_phase": 1,
    }
    return {
        "n": n,
        "inventory": inventory,
        "dimension": sum(inventory.values()),
        "components": 4,
    }
