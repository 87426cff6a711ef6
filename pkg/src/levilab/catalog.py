"""Built-in exact constructions of the studied domains and map families.

Entries:

  * thm1 (n >= 3): the bounded circular domain

        sum_{j<=n-2} |z_j|^2 + |z_{n-1}|^4 + |z_n|^4
            + (conj(z_{n-1}) z_n + conj(z_n) z_{n-1})^2 < 1,

    invariant under an (n-1)-torus but under no full n-torus, with the
    one-disc-parameter automorphism family and its exact multiplier.

  * thm2: the bounded domain in C^2 with one non-smooth boundary point,

        |z1|^2 + |z2|^4 + 8 |z1-1|^2 ( z2^2/(z1-1)
            - (3/2) |z2|^2/|z1-1| + conj(z2)^2/(conj(z1)-1) )^2 < 1,

    with its real-parameter subgroup, the fibre retraction, and the map to
    the unbounded realization.

  * thm2-unbounded: Re z1 + (1/4)|z2|^4
        + 2 (z2^2 - (3/2)|z2|^2 + conj(z2)^2)^2 < 0.

  * half-space models Re z1 + P(z2) < 0, complex ellipsoids, and the
    fibred model domain used by the Cauchy estimate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import (
    AlgebraError,
    BaseFactor,
    HermitianExpr,
    conj_variable,
    constant,
    modulus_sq,
    variable,
)
from .geometry import DomainSpec, LocusSpec
from .maps import BaseTransform, MapComponent, RadicalMap, ScalarPower
from .rationals import GR, GaussianRational
from .reinhardt import ModelDomain

__all__ = [
    "CatalogEntry",
    "thm1_rho",
    "thm1_domain",
    "thm1_family",
    "thm1_multiplier",
    "thm1_loci",
    "thm1_linear_symmetries",
    "slit_base",
    "thm2_rho",
    "thm2_domain",
    "thm2_family",
    "thm2_multiplier",
    "thm2_unbounded_rho",
    "thm2_unbounded",
    "unbounding_map",
    "unbounding_multiplier",
    "unbounding_inverse_numeric",
    "boundary_point_near_one",
    "halfspace_model",
    "ellipsoid",
    "model_domain",
    "registry",
    "boundedness_certificate",
]


@dataclass
class CatalogEntry:
    name: str
    domain: DomainSpec | None = None
    membership: object | None = None      # numeric-only entries
    families: dict = field(default_factory=dict)
    manifest: dict = field(default_factory=dict)
    notes: str = ""


def _gr(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GR(x)


# ---------------------------------------------------------------------------
# the circular domain with coupled quartic tail (n >= 3)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=16)
def thm1_rho(n: int = 3) -> HermitianExpr:
    if n < 3:
        raise ValueError("needs n >= 3")
    rho = constant(-1, n)
    for j in range(n - 2):
        rho = rho + modulus_sq(j, n)
    zm, zn = variable(n - 2, n), variable(n - 1, n)
    wm, wn = conj_variable(n - 2, n), conj_variable(n - 1, n)
    cross = wm * zn + wn * zm
    return rho + (zm * wm) ** 2 + (zn * wn) ** 2 + cross * cross


def _mobius_base(n: int, a: GaussianRational) -> BaseFactor:
    """The denominator 1 - conj(a) z1 as a registered base."""
    e1 = tuple(1 if j == 0 else 0 for j in range(n))
    return BaseFactor(
        f"mob[{a}]", n, {(0,) * n: GR(1), e1: -a.conjugate()}
    )


def thm1_family(a, n: int = 3) -> RadicalMap:
    """One-parameter automorphism family of the circular domain.

    z1 undergoes the disc automorphism (z1 - a)/(1 - conj(a) z1); the middle
    coordinates pick up (1-|a|^2)^(1/2)/(1 - conj(a) z1); the last two pick
    up (1-|a|^2)^(1/4)/(1 - conj(a) z1)^(1/2).  Requires |a| < 1.
    """
    a = _gr(a)
    if not a.abs2() < 1:
        raise ValueError("parameter must satisfy |a| < 1")
    c = GR(1 - a.abs2())
    d = _mobius_base(n, a)
    z1 = variable(0, n)
    comps = [MapComponent((z1 - a).mul_radical(d, -2, 0))]
    for j in range(1, n - 2):
        comps.append(
            MapComponent(
                variable(j, n).mul_radical(d, -2, 0), (ScalarPower(c, 2),)
            )
        )
    for j in (n - 2, n - 1):
        comps.append(
            MapComponent(
                variable(j, n).mul_radical(d, -1, 0), (ScalarPower(c, 1),)
            )
        )
    return RadicalMap(n, n, tuple(comps), {}, name=f"thm1-family[{a}]", param=a)


def thm1_multiplier(a, n: int = 3) -> HermitianExpr:
    """(1 - |a|^2) / |1 - conj(a) z1|^2, the exact multiplier of the family."""
    a = _gr(a)
    d = _mobius_base(n, a)
    return constant(GR(1 - a.abs2()), n).mul_radical(d, -2, -2)


def thm1_loci(n: int = 3) -> list[LocusSpec]:
    """The two deficient-rank boundary loci (n = 3)."""
    if n != 3:
        raise ValueError("loci encoded for n = 3")

    def rank0(points: np.ndarray) -> np.ndarray:
        return (
            np.abs(np.abs(points[:, 0]) - 1.0)
            + np.abs(points[:, 1])
            + np.abs(points[:, 2])
        ) <= 1e-6

    def rank1(points: np.ndarray) -> np.ndarray:
        return (
            np.minimum(
                np.abs(points[:, 1] - points[:, 2]),
                np.abs(points[:, 1] + points[:, 2]),
            )
            <= 1e-6
        )

    return [
        LocusSpec("axis-circle", 0, rank0),
        LocusSpec("equal-or-opposite-tail", 1, rank1),
    ]


def thm1_linear_symmetries(n: int = 3) -> list[tuple[str, tuple]]:
    """Exact-unimodular generators of the linear symmetry group (n = 3):
    a phase on z1, a shared phase on (z2, z3), the swap, and the sign flip."""
    if n != 3:
        raise ValueError("encoded for n = 3")
    one, zero = GR(1), GR(0)
    u = GR(Fraction(3, 5), Fraction(4, 5))     # |u| = 1 exactly
    v = GR(Fraction(5, 13), Fraction(12, 13))  # |v| = 1 exactly
    return [
        ("phase-z1", ((u, zero, zero), (zero, one, zero), (zero, zero, one))),
        ("shared-phase-tail", ((one, zero, zero), (zero, v, zero), (zero, zero, v))),
        ("swap-tail", ((one, zero, zero), (zero, zero, one), (zero, one, zero))),
        ("sign-flip", ((one, zero, zero), (zero, one, zero), (zero, zero, -one))),
    ]


def boundedness_certificate(entry_name: str, n: int = 3) -> list[dict]:
    """rho + 1 as a sum of syntactically nonnegative pieces."""
    if entry_name == "thm1":
        zm, zn = variable(n - 2, n), variable(n - 1, n)
        wm, wn = conj_variable(n - 2, n), conj_variable(n - 1, n)
        pieces = [
            {"name": f"|z{j + 1}|^2", "expr": modulus_sq(j, n)} for j in range(n - 2)
        ]
        pieces += [
            {"name": f"|z{n - 1}|^4", "expr": (zm * wm) ** 2},
            {"name": f"|z{n}|^4", "expr": (zn * wn) ** 2},
            {"name": "coupled-square", "factor": wm * zn + wn * zm},
        ]
        return pieces
    if entry_name == "thm2":
        z1, z2 = variable(0, 2), variable(1, 2)
        w1, w2 = conj_variable(0, 2), conj_variable(1, 2)
        b = slit_base()
        return [
            {"name": "|z1|^2", "expr": modulus_sq(0, 2)},
            {"name": "|z2|^4", "expr": (z2 * w2) ** 2},
            {
                "name": "slit-square",
                "scale": GR(8),
                "factor": _slit_bracket(),
                "paired_radicals": ((b, 2),),
            },
        ]
    raise KeyError(entry_name)


def thm1_domain(n: int = 3) -> CatalogEntry:
    rho = thm1_rho(n)
    dom = DomainSpec(n, rho, f"thm1-c{n}", (0,) * n)
    manifest = {
        "lattice_rank": n - 1,
        "circular": True,
        "reinhardt": False,
        "pseudoconvex": True,
        "bounded_box": 1.0,
    }
    if n == 3:
        manifest["lattice_basis"] = [[1, 0, 0], [0, 1, 1]]
        manifest["non_reinhardt_witness"] = {"alpha": [0, 0, 2], "beta": [0, 2, 0]}
        manifest["aut_dimension"] = 4
        manifest["aut_components"] = 4
    return CatalogEntry(
        name=f"thm1-c{n}" if n != 3 else "thm1",
        domain=dom,
        families={
            "disc-parameter": {
                "build": lambda a: thm1_family(a, n),
                "multiplier": lambda a: thm1_multiplier(a, n),
                "param_range": "complex a with |a| < 1",
                "battery": (
                    GR(Fraction(1, 2)),
                    GR(Fraction(-2, 5)),
                    GR(Fraction(1, 3), Fraction(1, 3)),
                    GR(0, Fraction(3, 4)),
                    GR(0),
                ),
            }
        },
        manifest=manifest,
        notes="bounded pseudoconvex circular domain, not Reinhardt in any coordinates",
    )


# ---------------------------------------------------------------------------
# the C^2 domain with one bad boundary point and its unbounded realization
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def slit_base() -> BaseFactor:
    """z1 - 1; vanishes exactly at the bad boundary point (1, 0)."""
    return BaseFactor("b", 2, {(0, 0): GR(-1), (1, 0): GR(1)})


@lru_cache(maxsize=1)
def _slit_bracket() -> HermitianExpr:
    """z2^2/(z1-1) - (3/2)|z2|^2/|z1-1| + conj(z2)^2/(conj(z1)-1); real-valued."""
    b = slit_base()
    z2, w2 = variable(1, 2), conj_variable(1, 2)
    return (
        (z2 * z2).mul_radical(b, -2, 0)
        - GR(Fraction(3, 2)) * (z2 * w2).mul_radical(b, -1, -1)
        + (w2 * w2).mul_radical(b, 0, -2)
    )


@lru_cache(maxsize=1)
def thm2_rho() -> HermitianExpr:
    b = slit_base()
    s = _slit_bracket()
    return (
        modulus_sq(0, 2)
        + modulus_sq(1, 2) ** 2
        + constant(8, 2).mul_radical(b, 2, 2) * s * s
        - 1
    )


def thm2_domain() -> CatalogEntry:
    dom = DomainSpec(
        2,
        thm2_rho(),
        "thm2",
        (0, 0),
        known_bad_points=((1 + 0j, 0j),),
    )
    return CatalogEntry(
        name="thm2",
        domain=dom,
        families={
            "subgroup": {
                "build": thm2_family,
                "multiplier": thm2_multiplier,
                "param_range": "real a in (-1, 1)",
                "battery": (
                    GR(0),
                    GR(Fraction(1, 2)),
                    GR(Fraction(-2, 5)),
                    GR(Fraction(3, 4)),
                    GR(Fraction(-9, 10)),
                ),
            },
            "unbounding": {
                "build": lambda _=None: unbounding_map(),
                "multiplier": lambda _=None: unbounding_multiplier(),
                "param_range": "parameter-free",
                "battery": (None,),
            },
        },
        manifest={
            "bounded_box": 1.0,
            "pseudoconvex": False,
            "smooth_except": [[1.0, 0.0], [0.0, 0.0]],
            "orbit_accumulation": [[[-1.0, 0.0], [0.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]],
        },
        notes="bounded, non-pseudoconvex; boundary smooth real-analytic except one point",
    )


def thm2_family(a) -> RadicalMap:
    """Real-parameter subgroup: disc automorphism in z1 with matching
    quarter-power rescaling of z2; the slit base transforms by
    (z1 - 1) -> (1 + a)(z1 - 1)/(1 - a z1)."""
    a = _gr(a)
    if not (a.is_real() and -1 < a.re < 1):
        raise ValueError("parameter must be real with -1 < a < 1")
    b = slit_base()
    c = GR(1 - a.abs2())
    d = _mobius_base(2, a)
    z1, z2 = variable(0, 2), variable(1, 2)
    comps = (
        MapComponent((z1 - a).mul_radical(d, -2, 0)),
        MapComponent(z2.mul_radical(d, -1, 0), (ScalarPower(c, 1),)),
    )
    transforms = {
        b.id: BaseTransform(GR(1) + a, ((b, 1), (d, -1))),
    }
    return RadicalMap(2, 2, comps, transforms, name=f"thm2-subgroup[{a}]", param=a)


def thm2_multiplier(a) -> HermitianExpr:
    a = _gr(a)
    d = _mobius_base(2, a)
    return constant(GR(1 - a.abs2()), 2).mul_radical(d, -2, -2)


@lru_cache(maxsize=1)
def thm2_unbounded_rho() -> HermitianExpr:
    z1, z2 = variable(0, 2), variable(1, 2)
    w1, w2 = conj_variable(0, 2), conj_variable(1, 2)
    q = z2 * z2 - GR(Fraction(3, 2)) * z2 * w2 + w2 * w2
    return (
        GR(Fraction(1, 2)) * (z1 + w1)
        + GR(Fraction(1, 4)) * (z2 * w2) ** 2
        + 2 * q * q
    )


def thm2_unbounded() -> CatalogEntry:
    dom = DomainSpec(2, thm2_unbounded_rho(), "thm2-unbounded", (-1, 0))
    return CatalogEntry(
        name="thm2-unbounded",
        domain=dom,
        manifest={
            "bounded": False,
            "levi_negative_point": [[-0.75, 0.0], [1.0, 0.0]],
            "canonical_levi_value": -1.0,
        },
        notes="half-space realization; the Levi form is negative at (-3/4, 1)",
    )


def unbounding_map() -> RadicalMap:
    """(z1, z2) -> ((z1+1)/(z1-1), sqrt(2) z2 / sqrt(z1-1)); maps the bounded
    domain onto its half-space realization with multiplier 1/|z1-1|^2."""
    b = slit_base()
    z1, z2 = variable(0, 2), variable(1, 2)
    comps = (
        MapComponent((z1 + 1).mul_radical(b, -2, 0)),
        MapComponent(z2.mul_radical(b, -1, 0), (ScalarPower(GR(2), 2),)),
    )
    return RadicalMap(2, 2, comps, {}, name="unbounding")


def unbounding_multiplier() -> HermitianExpr:
    return constant(1, 2).mul_radical(slit_base(), -2, -2)


def unbounding_inverse_numeric(W: np.ndarray) -> np.ndarray:
    """Invert the unbounding map: solve for z1, then back-substitute for z2.

    z1 = (w1+1)/(w1-1) and z2 = w2 * sqrt(z1-1)/sqrt(2), with the same square
    root branch (argument in (0, 2*pi)) used by the forward map.
    """
    W = np.ascontiguousarray(W, dtype=np.complex128)
    z1 = (W[:, 0] + 1.0) / (W[:, 0] - 1.0)
    v = z1 - 1.0
    ang = np.angle(v)
    ang = np.where(ang < 0, ang + 2.0 * np.pi, ang)
    root = np.sqrt(np.abs(v)) * np.exp(0.5j * ang)
    out = np.empty_like(W)
    out[:, 0] = z1
    out[:, 1] = W[:, 1] * root / np.sqrt(2.0)
    return out


def boundary_point_near_one(delta: complex = 0j) -> tuple[complex, complex]:
    """A boundary point of the half-space realization with z2 = 1 + delta:
    Re z1 is solved exactly from rho' = 0 (Im z1 = 0)."""
    z2 = 1.0 + complex(delta)
    rho = thm2_unbounded_rho()
    val = rho.evaluate((0.0, z2), strict=False).real
    return (-val + 0j, z2)


# ---------------------------------------------------------------------------
# half-space models, ellipsoids, fibred model domain
# ---------------------------------------------------------------------------


def halfspace_model(P: HermitianExpr, name: str = "halfspace") -> CatalogEntry:
    """Re z1 + P(z2) < 0 for a real homogeneous P depending only on z2."""
    if P.n != 2:
        raise AlgebraError("P must live in C^2")
    if not P.is_real():
        raise AlgebraError("P must be real-valued")
    if not P.is_polynomial():
        raise AlgebraError("P must be polynomial")
    degrees = {
        t.alpha[1] + t.beta[1] for t in P.terms
    }
    if any(t.alpha[0] or t.beta[0] for t in P.terms):
        raise AlgebraError("P must depend only on z2")
    if len(degrees) > 1:
        raise AlgebraError(f"P is not homogeneous: degrees {sorted(degrees)}")
    z1, w1 = variable(0, 2), conj_variable(0, 2)
    rho = GR(Fraction(1, 2)) * (z1 + w1) + P
    dom = DomainSpec(2, rho, name, (-1, 0))
    return CatalogEntry(
        name=name,
        domain=dom,
        manifest={"bounded": False, "homogeneous_degree": next(iter(degrees), 0)},
    )


def ellipsoid(alpha, exact: bool = True, name: str | None = None) -> CatalogEntry:
    """{|z1|^2 + |z2|^(2 alpha) < 1}; exact mode needs integer alpha."""
    frac = Fraction(alpha)
    if exact:
        if frac.denominator != 1 or frac <= 0:
            raise ValueError("exact mode requires a positive integer exponent")
        k = int(frac)
        rho = modulus_sq(0, 2) + modulus_sq(1, 2) ** k - 1
        dom = DomainSpec(2, rho, name or f"ellipsoid-{k}", (0, 0))
        return CatalogEntry(
            name=dom.name,
            domain=dom,
            manifest={"lattice_rank": 2, "reinhardt": True, "pseudoconvex": True},
        )
    a = float(frac)
    if a <= 0:
        raise ValueError("exponent must be positive")

    def membership(points: np.ndarray) -> np.ndarray:
        return np.abs(points[:, 0]) ** 2 + np.abs(points[:, 1]) ** (2 * a) < 1.0

    return CatalogEntry(
        name=name or f"ellipsoid-{a}",
        membership=membership,
        manifest={"reinhardt": True, "numeric_only": True, "exponent": a},
    )


def model_domain(R: float, gamma: float) -> CatalogEntry:
    md = ModelDomain(float(R), float(gamma))
    return CatalogEntry(
        name=f"model-R{R}-g{gamma}",
        membership=md.contains_batch,
        manifest={"R": md.R, "gamma": md.gamma, "bounded": False},
        notes="every bounded holomorphic function is independent of z2",
    )


def registry() -> dict[str, object]:
    """Catalog builders by CLI name."""
    return {
        "thm1": thm1_domain,
        "thm1-c4": lambda: thm1_domain(4),
        "thm2": thm2_domain,
        "thm2-unbounded": thm2_unbounded,
        "ball2": lambda: ellipsoid(1, name="ball2"),
        "ellipsoid-2": lambda: ellipsoid(2),
        "halfspace-quartic": lambda: halfspace_model(
            GR(Fraction(1, 4)) * modulus_sq(1, 2) ** 2
            + 2
            * (
                variable(1, 2) ** 2
                - GR(Fraction(3, 2)) * modulus_sq(1, 2)
                + conj_variable(1, 2) ** 2
            )
            ** 2,
            name="halfspace-quartic",
        ),
        "model-domain": lambda: model_domain(1.0, 1.0),
    }
