"""Signature enumeration, dimension counts, the case table, and the Cauchy
estimate machinery. Oracles: independent combinatorial recounts, analytic
derivatives, and the closed-form bound."""

from itertools import product
from math import comb

import numpy as np
import pytest

from levilab.reinhardt import (
    ModelDomain,
    NormalizedSignature,
    achievable_dims,
    cauchy_bound,
    cauchy_derivative_numeric,
    cauchy_radius,
    decay_scan,
    dim_aut0,
    enumerate_signatures,
    lemma_a_cases,
    resolve_disc_case,
)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def test_enumerate_n1():
    sigs = enumerate_signatures(1)
    assert {(g.s, g.t, g.p) for g in sigs} == {(0, 0, 1), (0, 1, 1), (1, 1, 1)}
    assert all(g.blocks == (1,) for g in sigs)


def test_enumerate_n3_contains_shape():
    sigs = enumerate_signatures(3)
    shapes = {(g.s, g.t, g.p, g.blocks) for g in sigs}
    assert (1, 1, 2, (1, 2)) in shapes
    assert (1, 1, 2, (2, 1)) in shapes


def test_enumerate_n0_empty():
    assert enumerate_signatures(0) == []


def test_enumeration_count_matches_independent_recount():
    # oracle: compositions of n into p parts = C(n-1, p-1); (s, t) pairs with
    # 0 <= s <= t <= p form a triangle of (p+1)(p+2)/2 choices
    for n in range(1, 7):
        expected = sum(
            comb(n - 1, p - 1) * (p + 1) * (p + 2) // 2 for p in range(1, n + 1)
        )
        assert len(enumerate_signatures(n)) == expected


def test_enumeration_matches_brute_force_assignment():
    # second oracle: raw product loop over type assignments per block count
    for n in (1, 2, 3, 4):
        brute = set()
        for p in range(1, n + 1):
            for blocks in _compositions_oracle(n, p):
                for kinds in product(("ball", "affine", "rotation"), repeat=p):
                    # kinds must be sorted ball* affine* rotation* to be a
                    # valid (s, t) split
                    order = {"ball": 0, "affine": 1, "rotation": 2}
                    seq = [order[k] for k in kinds]
                    if seq == sorted(seq):
                        s = sum(1 for k in kinds if k == "ball")
                        t = s + sum(1 for k in kinds if k == "affine")
                        brute.add((s, t, p, blocks))
        ours = {(g.s, g.t, g.p, g.blocks) for g in enumerate_signatures(n)}
        assert ours == brute


def _compositions_oracle(n, p):
    if p == 1:
        yield (n,)
        return
    for first in range(1, n - p + 2):
        for rest in _compositions_oracle(n - first, p - 1):
            yield (first,) + rest


def test_invalid_signature_rejected():
    with pytest.raises(ValueError):
        NormalizedSignature(3, 2, 1, 3, (1, 1, 1))
    with pytest.raises(ValueError):
        NormalizedSignature(3, 0, 0, 2, (1, 1))


# ---------------------------------------------------------------------------
# dimension counts
# ---------------------------------------------------------------------------


def test_dim_disc_automorphisms():
    sig = NormalizedSignature(1, 1, 1, 1, (1,))
    assert dim_aut0(sig).total == 3


def test_dim_three_rotation_blocks():
    sig = NormalizedSignature(3, 0, 0, 3, (1, 1, 1))
    assert dim_aut0(sig).total == 3


def test_dim_mixed_example():
    sig = NormalizedSignature(3, 1, 1, 2, (1, 2))
    rep = dim_aut0(sig)
    assert [c[3] for c in rep.contributions] == [3, 4]
    assert rep.total == 7


def test_dim_full_ball_is_max():
    for n in range(1, 6):
        sig = NormalizedSignature(n, 1, 1, 1, (n,))
        assert dim_aut0(sig).total == (n + 1) ** 2 - 1
        assert max(achievable_dims(n)) == (n + 1) ** 2 - 1


def test_dim_additive_and_permutation_invariant():
    a = NormalizedSignature(5, 1, 1, 3, (1, 2, 2))
    b = NormalizedSignature(5, 1, 1, 3, (1, 2, 2))
    assert dim_aut0(a).total == dim_aut0(b).total
    # same multiset of rotation blocks in different order
    c = NormalizedSignature(6, 0, 0, 3, (1, 2, 3))
    d = NormalizedSignature(6, 0, 0, 3, (3, 2, 1))
    assert dim_aut0(c).total == dim_aut0(d).total
    assert dim_aut0(c).total == 1 + 4 + 9


def test_achievable_dims_3_excludes_4():
    dims = achievable_dims(3)
    assert dims == {3, 5, 7, 9, 11, 15}
    assert 4 not in dims
    assert all(d % 2 == 1 for d in dims)


def test_achievable_dims_1():
    assert achievable_dims(1) == {1, 3}


# ---------------------------------------------------------------------------
# case table
# ---------------------------------------------------------------------------


def test_lemma_a_case_table():
    cases = {(c.case, c.conditions): c for c in lemma_a_cases()}
    assert cases[("ii", "0 < r < R <= inf")].verdict == "not-simply-connected"
    assert cases[("i", "R finite")].verdict == "not-simply-connected"
    assert cases[("iii", "s = 1, exponent >= 0")].verdict == "pseudoconvex"
    assert cases[("iii", "s = 0")].verdict == "not-hyperbolic-contains-line"
    supplied = [c for c in lemma_a_cases() if c.supplied]
    assert len(supplied) == 2


def test_resolve_disc_case():
    rec = resolve_disc_case(1, -0.19, R=0.9)
    assert rec.verdict == "model-domain"
    assert rec.model == ModelDomain(0.9, 0.19)
    assert resolve_disc_case(1, 2.0).verdict == "pseudoconvex"
    assert resolve_disc_case(0, -1.0).verdict == "not-hyperbolic-contains-line"


# ---------------------------------------------------------------------------
# model domain
# ---------------------------------------------------------------------------


def test_model_domain_membership_matches_inequality():
    md = ModelDomain(0.9, 1 / 0.19)
    rng = np.random.default_rng(0)
    z1 = (rng.uniform(-1, 1, 1000) + 1j * rng.uniform(-1, 1, 1000)) * 0.999
    z2 = (rng.normal(size=1000) + 1j * rng.normal(size=1000)) * 3.0
    pts = np.stack([z1, z2], axis=1)
    got = md.contains_batch(pts)
    want = np.array(
        [
            abs(a) < 1 and abs(b) < 0.9 / (1 - abs(a) ** 2) ** md.gamma
            for a, b in pts
        ]
    )
    assert np.array_equal(got, want)
    assert md.contains(0, 0.5)
    with pytest.raises(ValueError):
        ModelDomain(-1, 1)


def test_model_domain_fibre_blowup_exponent():
    # sup |z2| over member samples at |z1| = mu grows like (1-|mu|^2)^(-gamma)
    md = ModelDomain(1.0, 1.7)
    rng = np.random.default_rng(0)
    mus = 1.0 - np.logspace(-1, -4, 8)
    sups = []
    for mu in mus:
        cap = 2.0 * md.fibre_radius(mu)
        z2 = cap * np.sqrt(rng.uniform(0, 1, 4000)) * np.exp(
            1j * rng.uniform(0, 2 * np.pi, 4000)
        )
        pts = np.stack([np.full_like(z2, mu), z2], axis=1)
        inside = md.contains_batch(pts)
        sups.append(np.abs(z2[inside]).max())
    x = np.log(1.0 - mus**2)
    slope = np.polyfit(x, np.log(sups), 1)[0]
    assert abs(slope + md.gamma) < 0.05 * md.gamma


# ---------------------------------------------------------------------------
# Cauchy machinery
# ---------------------------------------------------------------------------


def test_cauchy_bound_formula_point():
    assert cauchy_radius(2.0, 1.0, 0.0) == 1.0
    assert cauchy_bound(1.0, 2.0, 1.0, 0.0, 0.0) == 1.0


def test_cauchy_bound_monotonicity():
    # increasing in rho_abs and M, decreasing in R_mu
    b0 = cauchy_bound(1.0, 2.0, 1.0, 0.5, 0.2)
    assert cauchy_bound(1.0, 2.0, 1.0, 0.5, 0.4) > b0
    assert cauchy_bound(2.0, 2.0, 1.0, 0.5, 0.2) > b0
    assert cauchy_bound(1.0, 2.0, 1.0, 0.7, 0.2) < b0  # larger |mu| -> larger R_mu


def test_cauchy_bound_precondition():
    with pytest.raises(ValueError):
        cauchy_bound(1.0, 0.1, 3.0, 0.0, 1.0)  # R_mu = 0.05 <= rho_abs


def test_cauchy_derivative_polynomials():
    # nodes=512 trapezoid is spectrally exact for polynomial integrands
    d = cauchy_derivative_numeric(lambda z1, z2: z2**2, 0.3, 0.5, radius=1.0)
    assert abs(d - 1.0) < 1e-10
    d = cauchy_derivative_numeric(lambda z1, z2: z1 * z2, 0.3 + 0.1j, 0.2, radius=1.0)
    assert abs(d - (0.3 + 0.1j)) < 1e-10
    d = cauchy_derivative_numeric(lambda z1, z2: z1**3 - 2.0, 0.4, 0.1, radius=0.8)
    assert abs(d) < 1e-10


def test_cauchy_derivative_higher_degree_oracle():
    rng = np.random.default_rng(1)
    coeffs = rng.normal(size=5) + 1j * rng.normal(size=5)

    def f(z1, z2):
        return sum(c * z2**k for k, c in enumerate(coeffs))

    def fprime(z2):
        return sum(k * c * z2 ** (k - 1) for k, c in enumerate(coeffs) if k)

    rho = 0.3 - 0.2j
    d = cauchy_derivative_numeric(f, 0.0, rho, radius=1.0)
    assert abs(d - fprime(rho)) < 1e-10


def test_decay_scan_criterion():
    mus = [1 - 10.0**-k for k in range(1, 9)]
    rep = decay_scan(1.0, 2.0, 1.0, mus, rho_abs=1.0)
    assert rep["strictly_decreasing"]
    assert rep["final_over_initial"] < 1e-6


def test_decay_faster_for_larger_gamma():
    mu = 1 - 1e-3
    b1 = cauchy_bound(1.0, 2.0, 1.0, mu, 0.5)
    b2 = cauchy_bound(1.0, 2.0, 2.0, mu, 0.5)
    assert b2 < b1


def test_constant_in_fibre_function_has_zero_derivative():
    for mu in (0.0, 0.5, 0.9):
        d = cauchy_derivative_numeric(lambda z1, z2: 3.0 + z1**2, mu, 0.1, radius=1.0)
        assert abs(d) < 1e-12
