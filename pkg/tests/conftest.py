"""Shared fixtures and independent oracle helpers.

The oracles here deliberately avoid the library's own code paths: a naive
dict-based polynomial calculator for cross-checking ring operations, and
central differences for cross-checking Wirtinger derivatives.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from levilab.algebra import BaseFactor, HermitianExpr, Term
from levilab.rationals import GR


# ---------------------------------------------------------------------------
# naive polynomial oracle: dict[(alpha, beta)] -> complex
# ---------------------------------------------------------------------------


def naive_from_expr(e: HermitianExpr) -> dict:
    if not e.is_polynomial():
        raise ValueError("naive oracle handles radical-free expressions")
    return {(t.alpha, t.beta): t.coeff.to_complex() for t in e.terms}


def naive_add(p1: dict, p2: dict) -> dict:
    out = dict(p1)
    for k, v in p2.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if abs(v) > 0}


def naive_mul(p1: dict, p2: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in p1.items():
        for (a2, b2), c2 in p2.items():
            k = (tuple(x + y for x, y in zip(a1, a2)), tuple(x + y for x, y in zip(b1, b2)))
            out[k] = out.get(k, 0) + c1 * c2
    return out


def naive_eval(p: dict, point) -> complex:
    total = 0j
    for (alpha, beta), c in p.items():
        v = c
        for z, a in zip(point, alpha):
            v *= z**a
        for z, b in zip(point, beta):
            v *= np.conj(z) ** b
        total += v
    return total


def naive_close(p1: dict, p2: dict, tol=1e-12) -> bool:
    keys = set(p1) | set(p2)
    return all(abs(p1.get(k, 0) - p2.get(k, 0)) <= tol for k in keys)


# ---------------------------------------------------------------------------
# finite-difference Wirtinger oracle
# ---------------------------------------------------------------------------


def wirtinger_fd(expr: HermitianExpr, j: int, point, kind="holo", h=1e-5) -> complex:
    def ev(dz):
        q = list(point)
        q[j] = q[j] + dz
        return expr.evaluate(tuple(q), strict=False)

    dx = (ev(h) - ev(-h)) / (2 * h)
    dy = (ev(1j * h) - ev(-1j * h)) / (2 * h)
    if kind == "anti":
        return 0.5 * (dx + 1j * dy)
    return 0.5 * (dx - 1j * dy)


# ---------------------------------------------------------------------------
# random expression generator (seeded, reproducible)
# ---------------------------------------------------------------------------


def random_polynomial(rng: random.Random, n: int, max_terms=5, max_deg=3) -> HermitianExpr:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = GR(
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
        )
        alpha = tuple(rng.randint(0, max_deg) for _ in range(n))
        beta = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms.append(Term(coeff, alpha, beta))
    return HermitianExpr(n, terms)


def random_expr_with_radical(rng: random.Random, n: int) -> HermitianExpr:
    """A random polynomial, possibly multiplied by integer or paired
    half-integer powers of the base z_1 - 2 (nonzero near the unit polydisc)."""
    e = random_polynomial(rng, n)
    if rng.random() < 0.5:
        base = BaseFactor("shift", n, {(0,) * n: GR(-2), (1,) + (0,) * (n - 1): GR(1)})
        p2, q2 = rng.choice([(-2, -2), (1, 1), (-1, -1), (-2, 0), (0, -2), (3, 1)])
        e = e.mul_radical(base, p2, q2)
    return e


def random_point(rng: random.Random, n: int, scale=0.6):
    return tuple(
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)) for _ in range(n)
    )


@pytest.fixture(scope="session")
def thm1_entry():
    from levilab.catalog import thm1_domain

    return thm1_domain(3)


@pytest.fixture(scope="session")
def thm2_entry():
    from levilab.catalog import thm2_domain

    return thm2_domain()


@pytest.fixture(scope="session")
def unbounded_entry():
    from levilab.catalog import thm2_unbounded

    return thm2_unbounded()
