"""Command-line driver.

Verbs: verify-thm1, verify-thm2, classify, levi, stratify, orbit, lattice,
catalog.  Reports are JSON on stdout (or --out FILE); classify can also emit
the dimension table as CSV.  Exit code 0 iff the overall verdict is PASS.
Environment: LEVILAB_BACKEND selects the numeric backend, LEVILAB_THREADS
caps numba threads.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .algebra import AlgebraError
from .catalog import registry, thm1_domain, thm1_family, thm2_family
from .geometry import (
    canonical_tangent_levi,
    levi_restricted,
    sample_boundary,
    stratify,
    torus_invariance_lattice,
)
from .maps import orbit
from .rationals import GR
from .serialize import domain_from_dict, domain_to_dict, dump_json
from .suites import classify_dims, verify_thm1, verify_thm2

__all__ = ["main"]


def _emit(obj: dict, out: str | None) -> None:
    text = dump_json(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_domain(source: str):
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        reg = registry()
        if name not in reg:
            raise SystemExit(f"unknown catalog entry {name!r}; try 'catalog list'")
        entry = reg[name]()
        if entry.domain is None:
            raise SystemExit(f"catalog entry {name!r} is numeric-only")
        return entry.domain
    with open(source) as fh:
        return domain_from_dict(json.load(fh))


def _parse_point(text: str):
    data = json.loads(text)
    return tuple(complex(r, i) for r, i in data)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="levilab", description=__doc__)
    ap.add_argument("--version", action="version", version=f"levilab {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-thm1", help="suite for the circular domain in C^3")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("verify-thm2", help="suite for the slit-quartic domain in C^2")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("classify", help="normalized-form dimension table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", help="write the table as CSV to this path")
    p.add_argument("--out")

    p = sub.add_parser("levi", help="Levi report at a boundary point")
    p.add_argument("--domain", required=True, help="catalog:NAME or a domain JSON file")
    p.add_argument("--point", required=True, help='JSON pairs, e.g. "[[-0.75,0],[1,0]]"')
    p.add_argument("--boundary-tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("stratify", help="rank stratification over boundary samples")
    p.add_argument("--domain", required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("orbit", help="orbit of a point under a map family")
    p.add_argument("--family", choices=("thm1", "thm2"), required=True)
    p.add_argument("--kmax", type=int, default=6, help="parameters a = 1 - 10^-k, k=1..kmax")
    p.add_argument("--negative", action="store_true", help="use a = -(1 - 10^-k)")
    p.add_argument(
        "--params",
        help='explicit rational parameters, e.g. "1/2,9/10" (overrides --kmax)',
    )
    p.add_argument("--out")

    p = sub.add_parser("lattice", help="torus-invariance lattice of a domain")
    p.add_argument("--domain", required=True)
    p.add_argument("--out")

    p = sub.add_parser(
        "signscan", help="sign preservation of a map between two domains"
    )
    p.add_argument("--map", required=True, help="a map JSON file")
    p.add_argument("--src", required=True, help="source domain (catalog:NAME or file)")
    p.add_argument("--dst", required=True, help="target domain (catalog:NAME or file)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--boundary-tol", type=float, default=1e-6)
    p.add_argument("--out")

    p = sub.add_parser("catalog", help="list or export built-in constructions")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("--family", help="export this attached family instead of the domain")
    p.add_argument("--param", help="rational parameter for the family, e.g. 1/2")
    p.add_argument("--out")

    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except AlgebraError as exc:
        raise SystemExit(f"levilab: {exc}")


def _dispatch(args) -> int:
    if args.cmd == "verify-thm1":
        report = verify_thm1(args.samples, args.seed)
        _emit(report, args.out)
        return 0 if report["overall"] == "PASS" else 1

    if args.cmd == "verify-thm2":
        report = verify_thm2(args.samples, args.seed)
        _emit(report, args.out)
        return 0 if report["overall"] == "PASS" else 1

    if args.cmd == "classify":
        report = classify_dims(args.n)
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["s", "t", "p", "blocks", "contributions", "total"])
                for row in report["rows"]:
                    w.writerow(
                        [
                            row["s"],
                            row["t"],
                            row["p"],
                            " ".join(map(str, row["blocks"])),
                            " ".join(map(str, row["contributions"])),
                            row["total"],
                        ]
                    )
        _emit(report, args.out)
        return 0

    if args.cmd == "levi":
        dom = _load_domain(args.domain)
        point = _parse_point(args.point)
        rep = levi_restricted(dom, point, boundary_tol=args.boundary_tol)
        out = rep.to_dict()
        if dom.n == 2:
            out["canonical_tangent_value"] = canonical_tangent_levi(dom, point)
        _emit(out, args.out)
        return 0

    if args.cmd == "stratify":
        dom = _load_domain(args.domain)
        res = sample_boundary(dom, args.samples, args.seed)
        loci = []
        if dom.name.startswith("thm1") and dom.n == 3:
            from .catalog import thm1_loci

            loci = thm1_loci(3)
        rep = stratify(dom, res.points, loci)
        out = rep.to_dict()
        out["sampling"] = res.to_dict()
        out["verdict"] = "PASS" if not rep.witnesses else "FAIL"
        from .geometry import LOCUS_TOL, RANK_TOL

        out["tolerances"] = {"rank_zero": RANK_TOL, "locus_membership": LOCUS_TOL}
        _emit(out, args.out)
        return 0 if not rep.witnesses else 1

    if args.cmd == "orbit":
        if args.params:
            params = [GR(Fraction(tok)) for tok in args.params.split(",")]
        else:
            params = [GR(1) - GR(Fraction(1, 10**k)) for k in range(1, args.kmax + 1)]
        if args.negative:
            params = [-a for a in params]
        if args.family == "thm1":
            dom = thm1_domain(3).domain
            rep = orbit(lambda a: thm1_family(a, 3), dom, (0, 0, 0), params)
        else:
            from .catalog import thm2_domain

            dom = thm2_domain().domain
            rep = orbit(thm2_family, dom, (0, 0), params)
        _emit(rep.to_dict(), args.out)
        return 0

    if args.cmd == "lattice":
        dom = _load_domain(args.domain)
        _emit(torus_invariance_lattice(dom).to_dict(), args.out)
        return 0

    if args.cmd == "signscan":
        from .maps import sign_preservation_scan
        from .serialize import map_from_dict

        with open(args.map) as fh:
            F = map_from_dict(json.load(fh))
        rep = sign_preservation_scan(
            F,
            _load_domain(args.src),
            _load_domain(args.dst),
            args.samples,
            args.seed,
            boundary_tol=args.boundary_tol,
        )
        rep["seed"] = args.seed
        rep["boundary_tol"] = args.boundary_tol
        _emit(rep, args.out)
        return 0 if rep["pass"] else 1

    if args.cmd == "catalog":
        reg = registry()
        if args.action == "list":
            rows = []
            for name, build in sorted(reg.items()):
                entry = build()
                rows.append(
                    {
                        "name": name,
                        "exact": entry.domain is not None,
                        "families": sorted(entry.families),
                        "notes": entry.notes,
                        "manifest": entry.manifest,
                    }
                )
            _emit({"entries": rows}, args.out)
            return 0
        if not args.name or args.name not in reg:
            raise SystemExit("catalog export needs a valid entry name")
        entry = reg[args.name]()
        if args.family:
            from .serialize import map_to_dict

            fam = entry.families.get(args.family)
            if fam is None:
                raise SystemExit(
                    f"entry {entry.name!r} has no family {args.family!r}; "
                    f"available: {sorted(entry.families)}"
                )
            param = GR(Fraction(args.param)) if args.param else None
            try:
                F = fam["build"](param)
            except (ValueError, TypeError, AttributeError):
                raise SystemExit(
                    f"family {args.family!r} needs --param in range: {fam['param_range']}"
                )
            _emit(map_to_dict(F), args.out)
            return 0
        if entry.domain is None:
            _emit({"name": entry.name, "manifest": entry.manifest}, args.out)
            return 0
        _emit(domain_to_dict(entry.domain), args.out)
        return 0

    return 2


if __name__ == "__main__":
    raise SystemExit(main())
