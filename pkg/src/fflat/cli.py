"""Command-line front end.

Commands:
  build       construct a lattice from a curve spec (or A_n for --rational)
  invariants  exact invariant report for a lattice JSON file
  aut         permutation stabilizer or full isometry order
  verify      run named verification checks (--list shows the catalog)

Exit codes: 0 success, 1 verification failure, 2 usage/input error,
3 resource guard tripped.  Output JSON is canonical (sorted keys, compact
separators, integers beyond 2^53 rendered as decimal strings) so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import autgroup, latcore, verify
from .builders import build_ff_lattice
from .curves import HyperellipticModel
from .errors import ResourceLimitError
from .fieldpoly import FpPoly, PrimeField

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

_BIG = 2**53


def _portable(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _BIG else obj
    if isinstance(obj, (list, tuple)):
        return [_portable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _portable(v) for k, v in obj.items()}
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_portable(obj), sort_keys=True, separators=(",", ":")) + "\n"


def _parse_model(args) -> HyperellipticModel:
    field = PrimeField(args.p)
    f = FpPoly.from_string(field, args.f)
    return HyperellipticModel(field, f)


def cmd_build(args) -> int:
    if args.rational:
        if args.n is None:
            raise ValueError("--rational requires --n")
        bundle = build_ff_lattice("rational", n=args.n)
    else:
        if args.p is None or args.f is None:
            raise ValueError("build requires --p and --f (or --rational --n)")
        model = _parse_model(args)
        bundle = build_ff_lattice(args.places, model=model)
    lattice_doc = bundle.lattice.to_json_dict()
    places_doc = bundle.places.to_json_list()
    if args.out:
        out = Path(args.out)
        out.write_text(canonical_json(lattice_doc))
        sidecar = out.with_name(out.name + ".places.json")
        sidecar.write_text(canonical_json(places_doc))
    else:
        sys.stdout.write(canonical_json({"lattice": lattice_doc, "places": places_doc}))
    return EXIT_OK


def _load_lattice(path: str) -> latcore.IntegerLattice:
    doc = json.loads(Path(path).read_text())
    if "lattice" in doc:
        doc = doc["lattice"]
    return latcore.IntegerLattice.from_json_dict(doc)


def cmd_invariants(args) -> int:
    lattice = _load_lattice(args.lattice)
    gd = latcore.gram_and_det2(lattice)
    report: dict = {
        "ambient_dim": lattice.ambient_dim,
        "rank": lattice.rank,
        "det2": gd.det2,
        "minimum2": latcore.minimum2(lattice),
        "kissing_number": latcore.kissing_number(lattice),
        "well_rounded": latcore.is_well_rounded(lattice),
    }
    if args.minima:
        profile = latcore.successive_minima2(lattice, max_results=args.max_enum)
        report["lambda2"] = list(profile.lambda2)
    if args.basis:
        basis = latcore.minimal_vector_basis(lattice)
        report["minimal_vector_basis"] = (
            [list(r) for r in basis.basis] if basis is not None else "not_found"
        )
    sys.stdout.write(canonical_json(report))
    return EXIT_OK


def cmd_aut(args) -> int:
    lattice = _load_lattice(args.lattice)
    if args.mode == "perm":
        group = autgroup.perm_stabilizer(lattice, max_dim=args.max_perm_dim)
        report = {
            "order": str(group.order),
            "factored": [[p, e] for p, e in autgroup.factorized(group.order)],
            "includes_minus_id": False,
            "generators": [list(g) for g in group.generators],
        }
    else:
        rep = autgroup.isometry_group_order(lattice)
        report = rep.to_json_dict()
        report["generators"] = []
    sys.stdout.write(canonical_json(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        catalog = {
            name: spec.description for name, spec in verify.CHECKS.items()
        }
        sys.stdout.write(canonical_json(catalog))
        return EXIT_OK
    if args.all:
        names = list(verify.CHECKS)
    else:
        names = args.check or []
        if not names:
            raise ValueError("verify requires --check NAME or --all")
        unknown = [n for n in names if n not in verify.CHECKS]
        if unknown:
            raise ValueError(f"unknown check names: {', '.join(unknown)}")
    results = []
    failed = 0
    for name in names:
        result = verify.run_check(name)
        results.append(result)
        if result.status == "fail":
            failed += 1
        line = f"{result.status.upper():7s} {name}"
        if result.status == "skipped":
            line += f" ({result.details.get('reason', '')})"
        print(line, file=sys.stderr)
    summary = {
        "checks": [r.to_json_dict() for r in results],
        "passed": sum(1 for r in results if r.status == "pass"),
        "failed": failed,
        "skipped": sum(1 for r in results if r.status == "skipped"),
    }
    sys.stdout.write(canonical_json(summary))
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fflat",
        description="Exact invariants and automorphisms of function field lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a lattice from a curve spec")
    b.add_argument("--p", type=int, help="odd prime modulus")
    b.add_argument("--f", type=str, help="comma-separated ascending coefficients of f")
    b.add_argument(
        "--places",
        choices=["rational", "elliptic", "ramified-inert", "all-rational"],
        default="ramified-inert",
    )
    b.add_argument("--rational", action="store_true", help="build A_n instead of a curve lattice")
    b.add_argument("--n", type=int, help="rank for --rational")
    b.add_argument("--out", type=str, help="write lattice JSON here (+ .places.json sidecar)")
    b.set_defaults(fn=cmd_build)

    i = sub.add_parser("invariants", help="exact invariant report for a lattice file")
    i.add_argument("lattice", help="lattice JSON file")
    i.add_argument("--minima", action="store_true", help="include successive minima")
    i.add_argument("--basis", action="store_true", help="include a minimal-vector basis witness")
    i.add_argument("--max-enum", type=int, default=latcore.DEFAULT_ENUM_CAP)
    i.set_defaults(fn=cmd_invariants)

    a = sub.add_parser("aut", help="automorphism group of a lattice file")
    a.add_argument("lattice", help="lattice JSON file")
    a.add_argument("--mode", choices=["perm", "full"], default="full")
    a.add_argument("--max-perm-dim", type=int, default=autgroup.PERM_STABILIZER_MAX_DIM)
    a.set_defaults(fn=cmd_aut)

    v = sub.add_parser("verify", help="run named verification checks")
    v.add_argument("--check", action="append", help="check name (repeatable)")
    v.add_argument("--all", action="store_true", help="run every check")
    v.add_argument("--list", action="store_true", help="list available checks")
    v.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
