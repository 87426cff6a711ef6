"""Domain and map file formats (JSON, bit-exact round trip)."""

from __future__ import annotations

import json

from .algebra import BaseFactor, expr_from_dict, expr_to_dict
from .algebra import _gr_from_obj, _gr_to_obj  # shared coefficient encoding
from .geometry import DomainSpec
from .maps import BaseTransform, MapComponent, RadicalMap, ScalarPower

__all__ = [
    "domain_to_dict",
    "domain_from_dict",
    "map_to_dict",
    "map_from_dict",
    "dump_json",
]


def dump_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _complex_pairs(points) -> list:
    return [[z.real, z.imag] for z in points]


def domain_to_dict(d: DomainSpec) -> dict:
    out = expr_to_dict(d.rho)
    out["name"] = d.name
    out["interior_anchor"] = _complex_pairs(d.interior_anchor)
    out["known_bad_points"] = [_complex_pairs(p) for p in d.known_bad_points]
    out["bad_point_radius"] = d.bad_point_radius
    return out


def domain_from_dict(obj: dict) -> DomainSpec:
    rho = expr_from_dict(obj)
    return DomainSpec(
        n=rho.n,
        rho=rho,
        name=obj.get("name", "domain"),
        interior_anchor=tuple(complex(r, i) for r, i in obj["interior_anchor"]),
        known_bad_points=tuple(
            tuple(complex(r, i) for r, i in p) for p in obj.get("known_bad_points", ())
        ),
        bad_point_radius=float(obj.get("bad_point_radius", 1e-3)),
    )


def _base_to_dict(b: BaseFactor) -> dict:
    return {
        "id": b.id,
        "n": b.n,
        "poly": [{"coeff": _gr_to_obj(c), "alpha": list(e)} for e, c in b.poly],
    }


def _base_from_dict(o: dict) -> BaseFactor:
    return BaseFactor(
        o["id"], o["n"], [(tuple(i["alpha"]), _gr_from_obj(i["coeff"])) for i in o["poly"]]
    )


def map_to_dict(F: RadicalMap) -> dict:
    return {
        "name": F.name,
        "n_in": F.n_in,
        "n_out": F.n_out,
        "params": [] if F.param is None else [_gr_to_obj(F.param)],
        "components": [
            {
                "body": expr_to_dict(c.body),
                "scalars": [
                    {"k": _gr_to_obj(s.k), "quarters": s.quarters} for s in c.scalars
                ],
            }
            for c in F.components
        ],
        "base_transforms": [
            {
                "base": bid,
                "const": _gr_to_obj(bt.const),
                "factors": [
                    {"base": _base_to_dict(bf), "power": power}
                    for bf, power in bt.factors
                ],
            }
            for bid, bt in sorted(F.base_transforms.items())
        ],
    }


def map_from_dict(obj: dict) -> RadicalMap:
    comps = tuple(
        MapComponent(
            expr_from_dict(c["body"]),
            tuple(ScalarPower(_gr_from_obj(s["k"]), s["quarters"]) for s in c["scalars"]),
        )
        for c in obj["components"]
    )
    transforms = {
        bt["base"]: BaseTransform(
            _gr_from_obj(bt["const"]),
            tuple((_base_from_dict(f["base"]), f["power"]) for f in bt["factors"]),
        )
        for bt in obj.get("base_transforms", ())
    }
    params = obj.get("params", [])
    return RadicalMap(
        n_in=obj["n_in"],
        n_out=obj["n_out"],
        components=comps,
        base_transforms=transforms,
        name=obj.get("name", "map"),
        param=_gr_from_obj(params[0]) if params else None,
    )
