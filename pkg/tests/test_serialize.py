"""Bit-exact JSON round trips for expression, domain, and map files."""

import json
import random

from conftest import random_expr_with_radical
from levilab.algebra import expr_from_json, expr_to_dict, expr_to_json
from levilab.catalog import (
    thm1_domain,
    thm1_family,
    thm2_domain,
    thm2_family,
    thm2_rho,
    unbounding_map,
)
from levilab.rationals import GR
from levilab.serialize import (
    domain_from_dict,
    domain_to_dict,
    map_from_dict,
    map_to_dict,
)
from fractions import Fraction


def test_expr_round_trip_random():
    rng = random.Random(42)
    for _ in range(30):
        e = random_expr_with_radical(rng, rng.choice([1, 2, 3]))
        back = expr_from_json(expr_to_json(e))
        assert back == e
        # bit-exact: identical serialized form too
        assert expr_to_json(back) == expr_to_json(e)


def test_expr_round_trip_catalog():
    e = thm2_rho()
    assert expr_from_json(expr_to_json(e)) == e


def test_expr_dict_schema():
    d = expr_to_dict(thm2_rho())
    assert set(d) == {"n", "bases", "terms"}
    term = d["terms"][1]
    assert set(term) == {"coeff", "alpha", "beta", "radicals"}
    assert set(term["coeff"]) == {"re", "im"}
    rad = term["radicals"][0]
    assert set(rad) == {"base", "p2", "q2"}
    assert isinstance(rad["p2"], int)


def test_domain_round_trip():
    for entry in (thm1_domain(3), thm2_domain()):
        d = entry.domain
        obj = domain_to_dict(d)
        text = json.dumps(obj, sort_keys=True)
        back = domain_from_dict(json.loads(text))
        assert back.rho == d.rho
        assert back.name == d.name
        assert back.interior_anchor == d.interior_anchor
        assert back.known_bad_points == d.known_bad_points


def test_map_round_trip():
    for F in (thm1_family(GR(Fraction(1, 3), Fraction(1, 5)), 3),
              thm2_family(GR(Fraction(1, 2))),
              unbounding_map()):
        obj = map_to_dict(F)
        back = map_from_dict(json.loads(json.dumps(obj, sort_keys=True)))
        assert back.n_in == F.n_in and back.n_out == F.n_out
        assert back.components == F.components
        assert back.base_transforms == F.base_transforms
        assert back.param == F.param
