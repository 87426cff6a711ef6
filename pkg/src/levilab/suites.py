"""Verification suites: each check returns a record and the suite aggregates
an overall verdict.

Check kinds: "exact" checks are zero-tolerance symbolic identities; "scan"
checks are sampling evidence with hard numeric bounds (a violated bound
fails the suite).  Reports are deterministic for fixed inputs and seed.
"""

from __future__ import annotations

from fractions import Fraction

from . import __version__
from .catalog import (
    boundary_point_near_one,
    boundedness_certificate,
    slit_base,
    thm1_domain,
    thm1_family,
    thm1_linear_symmetries,
    thm1_loci,
    thm1_multiplier,
    thm1_rho,
    thm2_domain,
    thm2_family,
    thm2_multiplier,
    thm2_rho,
    thm2_unbounded,
    unbounding_map,
    unbounding_multiplier,
)
from .geometry import (
    boundedness_evidence,
    canonical_tangent_levi,
    complex_gradient,
    gradient_nonvanishing_scan,
    sample_boundary,
    stratify,
    torus_invariance_lattice,
)
from .maps import (
    aut_dimension_bookkeeping,
    gradient_identity_check,
    multiplier_identity_check,
    orbit,
    retraction_check,
    sign_preservation_scan,
)
from .rationals import GR

__all__ = ["verify_thm1", "verify_thm2", "classify_dims"]

PSEUDOCONVEX_TOL = 1e-9
LEVI_VALUE_TOL = 1e-9
SMOOTHNESS_TOL = 1e-6


def _record(check_id, kind, passed, **values):
    return {"id": check_id, "kind": kind, "verdict": "PASS" if passed else "FAIL", **values}


def _finish(suite, seed, checks):
    overall = all(c["verdict"] == "PASS" for c in checks)
    return {
        "suite": suite,
        "tool": "levilab",
        "version": __version__,
        "seed": seed,
        "checks": checks,
        "overall": "PASS" if overall else "FAIL",
    }


def verify_thm1(samples: int = 10_000, seed: int = 0) -> dict:
    """Full suite for the bounded circular domain in C^3."""
    entry = thm1_domain(3)
    dom = entry.domain
    rho = thm1_rho(3)
    checks = []

    lat = torus_invariance_lattice(dom)
    checks.append(
        _record(
            "torus-lattice",
            "exact",
            lat.rank == 2 and list(lat.basis) == [(1, 0, 0), (0, 1, 1)] and lat.is_circular,
            rank=lat.rank,
            basis=[list(v) for v in lat.basis],
            circular=lat.is_circular,
        )
    )

    witness = {"alpha": [0, 0, 2], "beta": [0, 2, 0]}
    found = any(
        w["alpha"] == witness["alpha"] and w["beta"] == witness["beta"]
        for w in lat.witness_violations
    )
    checks.append(
        _record(
            "non-reinhardt-witness",
            "exact",
            (not lat.is_reinhardt) and found,
            witness=witness,
            reinhardt=lat.is_reinhardt,
        )
    )

    cert = boundedness_evidence(dom, certificate=boundedness_certificate("thm1", 3))
    box_ok = cert["verdict"] == "bounded" and all(
        abs(v - 1.0) < 1e-12 for v in cert["box"].values()
    )
    checks.append(_record("boundedness-certificate", "exact", box_ok, certificate=cert))

    bres = sample_boundary(dom, samples, seed)
    smooth = gradient_nonvanishing_scan(dom, bres.points)
    checks.append(
        _record(
            "smoothness-scan",
            "scan",
            smooth["min_grad_norm"] > SMOOTHNESS_TOL,
            min_grad_norm=smooth["min_grad_norm"],
            samples=int(bres.points.shape[0]),
        )
    )

    strat = stratify(dom, bres.points, thm1_loci(3))
    checks.append(
        _record(
            "stratification-loci",
            "scan",
            len(strat.witnesses) == 0,
            rank_counts={str(k): v for k, v in sorted(strat.rank_counts.items())},
            witnesses=strat.witnesses[:5],
        )
    )
    checks.append(
        _record(
            "pseudoconvexity-scan",
            "scan",
            strat.min_eigenvalue >= -PSEUDOCONVEX_TOL,
            min_eigenvalue=strat.min_eigenvalue,
            tolerance=PSEUDOCONVEX_TOL,
        )
    )

    battery = entry.families["disc-parameter"]["battery"]
    ident = multiplier_identity_check(
        lambda a: thm1_family(a, 3), rho, rho, lambda a: thm1_multiplier(a, 3), battery
    )
    checks.append(_record("multiplier-identity", "exact", ident["pass"], **ident))

    lin_ok = True
    lin_results = []
    for name, matrix in thm1_linear_symmetries(3):
        inv = rho.substitute_linear(matrix) == rho
        lin_ok &= inv
        lin_results.append({"symmetry": name, "invariant": inv})
    checks.append(_record("linear-automorphisms", "exact", lin_ok, results=lin_results))

    params = [GR(1) - GR(Fraction(1, 10**k)) for k in range(1, 7)]
    orb = orbit(lambda a: thm1_family(a, 3), dom, (0, 0, 0), params, probe_seed=seed)
    checks.append(
        _record(
            "orbit-decay",
            "scan",
            orb.strictly_decreasing and orb.distances[-1] < 1e-5,
            distances=orb.distances,
            limit=[[z.real, z.imag] for z in orb.limit_estimate],
        )
    )

    book = aut_dimension_bookkeeping(3)
    checks.append(
        _record(
            "aut-dimension",
            "exact",
            book["dimension"] == 4 and book["components"] == 4,
            **book,
        )
    )
    return _finish("verify-thm1", seed, checks)


def verify_thm2(samples: int = 1000, seed: int = 0) -> dict:
    """Full suite for the C^2 domain with one non-smooth boundary point."""
    entry = thm2_domain()
    dom = entry.domain
    phi = thm2_rho()
    unb = thm2_unbounded()
    checks = []

    checks.append(_record("defining-function-real", "exact", phi.is_real()))

    cert = boundedness_evidence(dom, certificate=boundedness_certificate("thm2"))
    box_ok = cert["verdict"] == "bounded" and all(
        abs(v - 1.0) < 1e-12 for v in cert["box"].values()
    )
    checks.append(_record("boundedness-certificate", "exact", box_ok, certificate=cert))

    grad_id = gradient_identity_check(phi, slit_base())
    checks.append(_record("gradient-identity", "exact", grad_id["pass"], **grad_id))

    bres = sample_boundary(dom, samples, seed)
    smooth = gradient_nonvanishing_scan(dom, bres.points)
    g_minus1 = complex_gradient(dom, (-1.0, 0.0))
    checks.append(
        _record(
            "smoothness-scan",
            "scan",
            smooth["min_grad_norm"] > SMOOTHNESS_TOL
            and abs(g_minus1[0]) > 0.5,
            min_grad_norm=smooth["min_grad_norm"],
            grad_at_minus_one=[[z.real, z.imag] for z in g_minus1],
            excluded_point=[[1.0, 0.0], [0.0, 0.0]],
        )
    )

    battery = entry.families["subgroup"]["battery"]
    ident = multiplier_identity_check(thm2_family, phi, phi, thm2_multiplier, battery)
    checks.append(_record("subgroup-multiplier-identity", "exact", ident["pass"], **ident))

    scan = sign_preservation_scan(thm2_family(GR(Fraction(1, 2))), dom, dom, samples, seed)
    checks.append(_record("subgroup-sign-preservation", "scan", scan["pass"], **scan))

    retr = retraction_check(dom, (0.0, 0.25, 0.5, 0.75, 1.0), samples, seed)
    checks.append(_record("retraction", "scan", retr["pass"], **retr))

    rhop = unb.domain.rho
    ident4 = multiplier_identity_check(
        lambda _: unbounding_map(), phi, rhop, lambda _: unbounding_multiplier(), (None,)
    )
    checks.append(_record("unbounding-multiplier-identity", "exact", ident4["pass"], **ident4))

    scan4 = sign_preservation_scan(unbounding_map(), dom, unb.domain, samples, seed)
    checks.append(_record("unbounding-sign-preservation", "scan", scan4["pass"], **scan4))

    levi_val = canonical_tangent_levi(unb.domain, (-0.75, 1.0))
    checks.append(
        _record(
            "levi-value-at-witness",
            "scan",
            abs(levi_val + 1.0) <= LEVI_VALUE_TOL,
            value=levi_val,
            expected=-1.0,
            tolerance=LEVI_VALUE_TOL,
        )
    )

    # negative Levi form on a neighborhood: exact boundary points around z2 = 1
    deltas = [0.0, 0.05, -0.05, 0.05j, -0.05j, 0.03 + 0.04j]
    canon = [
        canonical_tangent_levi(unb.domain, boundary_point_near_one(d)) for d in deltas
    ]
    checks.append(
        _record(
            "negative-levi-neighborhood",
            "scan",
            max(canon) <= -0.5,
            values=canon,
        )
    )

    params = [GR(1) - GR(Fraction(1, 10**k)) for k in range(1, 7)]
    orb_left = orbit(thm2_family, dom, (0, 0), params, probe_seed=seed)
    lim = orb_left.limit_estimate
    left_ok = (
        orb_left.strictly_decreasing
        and abs(lim[0] + 1.0) < 1e-5
        and abs(lim[1]) < 1e-9
    )
    orb_right = orbit(thm2_family, dom, (0, 0), [-a for a in params], probe_seed=seed)
    limr = orb_right.limit_estimate
    right_ok = abs(limr[0] - 1.0) < 1e-5 and abs(limr[1]) < 1e-9
    checks.append(
        _record(
            "orbit-accumulation",
            "scan",
            left_ok and right_ok,
            smooth_accumulation_point=[[lim[0].real, lim[0].imag], [0.0, 0.0]],
            bad_accumulation_point=[[limr[0].real, limr[0].imag], [0.0, 0.0]],
            distances=orb_left.distances,
        )
    )
    return _finish("verify-thm2", seed, checks)


def classify_dims(n: int) -> dict:
    """Dimension table of the normalized-form groups plus the exclusion set."""
    from .reinhardt import dim_aut0, enumerate_signatures

    if not 1 <= n <= 6:
        raise ValueError("n must be between 1 and 6")
    rows = []
    achievable = set()
    for sig in enumerate_signatures(n):
        rep = dim_aut0(sig)
        achievable.add(rep.total)
        rows.append(
            {
                "s": sig.s,
                "t": sig.t,
                "p": sig.p,
                "blocks": list(sig.blocks),
                "contributions": [c[3] for c in rep.contributions],
                "total": rep.total,
            }
        )
    excluded = sorted(set(range(1, max(achievable) + 1)) - achievable)
    return {
        "n": n,
        "signatures": len(rows),
        "achievable": sorted(achievable),
        "excluded": excluded,
        "rows": rows,
    }
