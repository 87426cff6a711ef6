"""Catalog constructions against committed golden files and their manifests."""

import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from levilab.algebra import (
    AlgebraError,
    conj_variable,
    expr_to_dict,
    modulus_sq,
    variable,
)
from levilab.catalog import (
    boundary_point_near_one,
    ellipsoid,
    halfspace_model,
    model_domain,
    registry,
    thm1_rho,
    thm2_rho,
    thm2_unbounded_rho,
)
from levilab.geometry import (
    canonical_tangent_levi,
    pseudoconvexity_scan,
    sample_boundary,
    torus_invariance_lattice,
)
from levilab.rationals import GR

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize(
    "name,expr_fn",
    [
        ("thm1_c3", lambda: thm1_rho(3)),
        ("thm1_c4", lambda: thm1_rho(4)),
        ("thm2", thm2_rho),
        ("thm2_unbounded", thm2_unbounded_rho),
    ],
)
def test_golden_expansions(name, expr_fn):
    got = expr_to_dict(expr_fn())
    want = json.loads((GOLDEN / f"{name}.json").read_text())
    assert got == want


def test_thm1_golden_matches_hand_expansion():
    # independent hand-expanded form of the n = 3 defining function
    n = 3
    z2, z3 = variable(1, n), variable(2, n)
    w2, w3 = conj_variable(1, n), conj_variable(2, n)
    hand = (
        modulus_sq(0, n)
        + modulus_sq(1, n) ** 2
        + modulus_sq(2, n) ** 2
        + w2**2 * z3**2
        + 2 * modulus_sq(1, n) * modulus_sq(2, n)
        + z2**2 * w3**2
        - 1
    )
    assert hand == thm1_rho(3)
    assert len(hand.terms) == 7


def test_thm2_evaluations():
    phi = thm2_rho()
    assert phi.evaluate((0, 0)) == -1
    assert phi.is_real()
    rhop = thm2_unbounded_rho()
    assert abs(rhop.evaluate((-0.75, 1.0))) < 1e-15
    assert rhop.evaluate((-100.0, 0.0)) == -100.0


def test_thm1_entry_manifest_self_validates(thm1_entry):
    man = thm1_entry.manifest
    lat = torus_invariance_lattice(thm1_entry.domain)
    assert lat.rank == man["lattice_rank"]
    assert [list(v) for v in lat.basis] == man["lattice_basis"]
    assert lat.is_circular == man["circular"]
    assert lat.is_reinhardt == man["reinhardt"]
    res = sample_boundary(thm1_entry.domain, 500, seed=0)
    scan = pseudoconvexity_scan(thm1_entry.domain, res.points)
    assert (scan["min_eigenvalue"] >= -1e-9) == man["pseudoconvex"]
    assert res.max_abs <= np.sqrt(3) * man["bounded_box"] + 1e-9


def test_thm2_unbounded_manifest(unbounded_entry):
    man = unbounded_entry.manifest
    p = tuple(complex(r, i) for r, i in man["levi_negative_point"])
    val = canonical_tangent_levi(unbounded_entry.domain, p)
    assert abs(val - man["canonical_levi_value"]) < 1e-12


def test_cross_entry_sign_consistency(thm2_entry, unbounded_entry):
    # the unbounding map sends interior to interior, sign for sign
    from levilab.catalog import unbounding_map
    from levilab.geometry import interior_samples

    pts = interior_samples(thm2_entry.domain, 500, seed=3)
    vals_src = thm2_entry.domain.rho_at(pts)
    vals_dst = unbounded_entry.domain.rho_at(unbounding_map().eval_batch(pts))
    assert np.all(np.sign(vals_src) == np.sign(vals_dst))


def test_boundary_point_near_one_is_exact_boundary(unbounded_entry):
    for d in (0, 0.05, -0.02j, 0.01 + 0.03j):
        p = boundary_point_near_one(d)
        assert abs(unbounded_entry.domain.rho.evaluate(p, strict=False)) < 1e-14


def test_halfspace_recovers_unbounded_model():
    P = (
        GR(Fraction(1, 4)) * modulus_sq(1, 2) ** 2
        + 2
        * (variable(1, 2) ** 2 - GR(Fraction(3, 2)) * modulus_sq(1, 2) + conj_variable(1, 2) ** 2)
        ** 2
    )
    entry = halfspace_model(P, name="x")
    assert entry.domain.rho == thm2_unbounded_rho()
    assert entry.manifest["homogeneous_degree"] == 4


def test_halfspace_psh_example_scan():
    entry = halfspace_model(modulus_sq(1, 2) ** 2, name="psh")
    res = sample_boundary(entry.domain, 300, seed=0)
    scan = pseudoconvexity_scan(entry.domain, res.points)
    assert scan["min_eigenvalue"] >= -1e-9


def test_halfspace_rejects_bad_P():
    with pytest.raises(AlgebraError):
        halfspace_model(variable(1, 2))  # not real
    with pytest.raises(AlgebraError):
        halfspace_model(modulus_sq(0, 2))  # depends on z1
    with pytest.raises(AlgebraError):
        halfspace_model(modulus_sq(1, 2) + modulus_sq(1, 2) ** 2)  # inhomogeneous


def test_ellipsoid_exact_and_numeric():
    ball = ellipsoid(1)
    assert ball.domain.rho == modulus_sq(0, 2) + modulus_sq(1, 2) - 1
    e2 = ellipsoid(2)
    lat = torus_invariance_lattice(e2.domain)
    assert lat.rank == 2 and lat.is_reinhardt
    res = sample_boundary(e2.domain, 300, seed=1)
    assert pseudoconvexity_scan(e2.domain, res.points)["min_eigenvalue"] >= -1e-9
    with pytest.raises(ValueError):
        ellipsoid(Fraction(1, 2))
    num = ellipsoid(Fraction(1, 2), exact=False)
    pts = np.array([[0.5, 0.5], [0.9, 0.9]], dtype=complex)
    assert list(num.membership(pts)) == [True, False]


def test_model_domain_entry():
    entry = model_domain(0.9, 1 / 0.19)
    pts = np.array([[0.0, 0.5], [0.0, 1.0]], dtype=complex)
    got = entry.membership(pts)
    assert got[0] and not got[1]


def test_registry_builds_everything():
    for name, build in registry().items():
        entry = build()
        assert entry.name
        assert (entry.domain is not None) or (entry.membership is not None)
