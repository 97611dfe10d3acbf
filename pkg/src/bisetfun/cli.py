"""Batch command-line driver.

Deterministic JSON/CSV outputs: identical configuration and seed produce
byte-identical files.  Exit codes: 0 success, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import bisets as bs
from . import category as ct
from . import green as gn
from . import star as st
from .catalog import (BUILTIN, DEFAULT_WINDOW, CatalogError, load_catalog,
                      resolve_window)
from .groups import GroupError, direct_product, subgroup_classes
from .verify import SUITES, Verifier


@dataclass
class RunConfig:
    catalog: str | None = None
    window: list = field(default_factory=lambda: list(DEFAULT_WINDOW))
    ring: str = "int"
    bound: int = 2
    max_order: int = 6
    high_arity_order: int = 3
    seed: int = 0
    out_dir: str | None = None
    corrupt: tuple = ()

    def groups(self):
        got = load_catalog(self.catalog)
        resolve_window(got, self.window)  # window names must resolve
        if self.bound < 1:
            raise CatalogError("search bound must be at least 1")
        return got


def _dump_json(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _emit(config, filename, text):
    if config.out_dir:
        os.makedirs(config.out_dir, exist_ok=True)
        path = os.path.join(config.out_dir, filename)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _functor_by_name(name, ring):
    B = gn.burnside_functor(ring)
    if name in ("B", "b"):
        return B
    if name.upper().startswith("M") and name[1:].isdigit():
        return gn.matrix_functor(B, int(name[1:]))
    if name in ("Bop", "bop"):
        return gn.opposite_functor(B)
    raise CatalogError(f"unknown functor {name!r} (use B, Bop, or Mn)")


def _star_by_functor(name, ring):
    SB = st.make_star_burnside(ring, validate=False)
    if name in ("B", "b"):
        return SB
    if name.upper().startswith("M") and name[1:].isdigit():
        return st.make_star_matrix(SB, int(name[1:]), validate=False)
    raise CatalogError(f"no star structure for functor {name!r}")


def cmd_groups(config, group_name=None):
    groups = config.groups()
    if group_name is not None:
        if group_name not in groups:
            raise CatalogError(f"unknown group {group_name!r}")
        G = groups[group_name]
        classes = subgroup_classes(G)
        data = {"name": G.name, "order": G.order,
                "subgroupClasses": [
                    {"label": c.label, "order": c.order,
                     "representative": list(c.representative.elements)}
                    for c in classes]}
        _emit(config, f"group_{G.name}.json", _dump_json(data))
        return 0
    rows = []
    for name in sorted(groups):
        G = groups[name]
        rows.append({"name": name, "order": G.order,
                     "subgroupClassCount": len(subgroup_classes(G))})
    _emit(config, "groups.json", _dump_json({"groups": rows}))
    return 0


def cmd_marks(config, group_name):
    groups = config.groups()
    if group_name not in groups:
        raise CatalogError(f"unknown group {group_name!r}")
    G = groups[group_name]
    classes = subgroup_classes(G)
    tom = bs.table_of_marks(G)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["set\\class"] + [c.label for c in classes])
    for v, row in enumerate(tom):
        writer.writerow([f"[{G.name}/{classes[v].label}]"] +
                        [str(x) for x in row])
    _emit(config, f"marks_{G.name}.csv", buf.getvalue())
    return 0


def cmd_ring_table(config, group_name, functor_name):
    groups = config.groups()
    if group_name not in groups:
        raise CatalogError(f"unknown group {group_name!r}")
    G = groups[group_name]
    A = _functor_by_name(functor_name, config.ring)
    basis, table = ct.endo_structure(A, G)
    P = direct_product([G, G])
    data = {"group": G.name, "functor": A.tag, "dim": len(basis),
            "basisLabels": A.basis_labels(P),
            "compositionTable": [[[str(c) for c in vec] for vec in row]
                                 for row in table]}
    _emit(config, f"ring_table_{functor_name}_{G.name}.json",
          _dump_json(data))
    return 0


def cmd_mul_table(config, group_name, functor_name):
    groups = config.groups()
    G = groups[group_name]
    A = _functor_by_name(functor_name, config.ring)
    basis = A.basis(G)
    data = {"group": G.name, "functor": A.tag, "dim": len(basis),
            "basisLabels": A.basis_labels(G),
            "productTable": [[[str(c) for c in A.coords(A.mul(a, b))]
                              for b in basis] for a in basis]}
    _emit(config, f"mul_table_{functor_name}_{G.name}.json",
          _dump_json(data))
    return 0


def cmd_units(config, group_name):
    groups = config.groups()
    if group_name not in groups:
        raise CatalogError(f"unknown group {group_name!r}")
    G = groups[group_name]
    units = bs.burnside_units(G)
    data = {"group": G.name,
            "unitCount": len(units),
            "units": [bs.element_to_json(u) for u in units]}
    _emit(config, f"units_{G.name}.json", _dump_json(data))
    return 0


def cmd_orth(config, group_name, functor_name):
    groups = config.groups()
    if group_name not in groups:
        raise CatalogError(f"unknown group {group_name!r}")
    G = groups[group_name]
    S = _star_by_functor(functor_name, config.ring)
    A = S.base
    urep = st.orthogonal_units(S, G, bound=config.bound)
    arep = st.orthogonal_automorphisms(S, G, bound=config.bound)
    data = {
        "group": G.name, "functor": A.tag,
        "orthogonalUnits": {
            "bound": urep["bound"], "exact": urep["exact"],
            "completeWithinBound": urep["completeWithinBound"],
            "groupTableVerified": urep["groupTableVerified"],
            "elements": [[str(c) for c in A.coords(u)]
                         for u in urep["elements"]],
        },
        "orthogonalAutomorphisms": {
            "bound": arep["bound"],
            "completeWithinBound": arep["completeWithinBound"],
            "groupTableVerified": arep["groupTableVerified"],
            "elements": [[str(c) for c in A.coords(m.value)]
                         for m in arep["elements"]],
        },
    }
    _emit(config, f"orth_{functor_name}_{G.name}.json", _dump_json(data))
    return 0


def cmd_verify(config, suite):
    config.groups()  # validates catalog and window up front
    v = Verifier(window=config.window, bound=config.bound,
                 max_order=config.max_order,
                 high_arity_order=config.high_arity_order,
                 seed=config.seed, corrupt=config.corrupt,
                 groups=load_catalog(config.catalog))
    report = v.report(suite)
    for c in report["checks"]:
        if c["ok"]:
            print(f"PASS {c['tag']}")
        else:
            print(f"FAIL {c['tag']} [{c.get('witness', '')}]")
    print(f"{report['suite']}: {len(report['checks'])} checks, "
          f"{report['failureCount']} failures")
    if config.out_dir:
        _emit(config, f"verify_{suite}.json", _dump_json(report))
    return 0 if report["passed"] else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="bisetfun",
        description="Exact biset calculus over a window of small finite "
                    "groups: Burnside tables, functor instances, "
                    "orthogonality searches and law-verification suites.")
    p.add_argument("--catalog", help="JSON group catalog merged over the "
                                     "builtin one")
    p.add_argument("--window", help="comma-separated group names "
                                    f"(default {','.join(DEFAULT_WINDOW)})")
    p.add_argument("--ring", choices=("int", "rat"), default="int")
    p.add_argument("--bound", type=int, default=2,
                   help="coordinate bound for orthogonality searches")
    p.add_argument("--max-order", type=int, default=6,
                   help="largest group order for the wide identity checks")
    p.add_argument("--high-arity-order", type=int, default=3,
                   help="largest group order for 4-factor identity checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output directory (default: stdout)")
    p.add_argument("--inject-defect", choices=("star-negate",),
                   help=argparse.SUPPRESS)  # test hook
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("groups", help="list the catalog")
    sp.add_argument("--group", help="show one group in detail")

    sp = sub.add_parser("marks", help="table of marks as CSV")
    sp.add_argument("group")

    sp = sub.add_parser("ring-table", help="endomorphism composition table")
    sp.add_argument("group")
    sp.add_argument("--functor", default="B")

    sp = sub.add_parser("mul-table", help="evaluation product table")
    sp.add_argument("group")
    sp.add_argument("--functor", default="B")

    sp = sub.add_parser("units", help="unit group of the Burnside ring")
    sp.add_argument("group")

    sp = sub.add_parser("orth", help="orthogonal units and automorphisms")
    sp.add_argument("group")
    sp.add_argument("--functor", default="B")

    sp = sub.add_parser("verify", help="run a law-verification suite")
    sp.add_argument("suite", choices=SUITES + ("all",))
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    window = args.window.split(",") if args.window else list(DEFAULT_WINDOW)
    config = RunConfig(catalog=args.catalog, window=window, ring=args.ring,
                       bound=args.bound, max_order=args.max_order,
                       high_arity_order=args.high_arity_order,
                       seed=args.seed, out_dir=args.out,
                       corrupt=(args.inject_defect,)
                       if args.inject_defect else ())
    try:
        if args.command == "groups":
            return cmd_groups(config, args.group)
        if args.command == "marks":
            return cmd_marks(config, args.group)
        if args.command == "ring-table":
            return cmd_ring_table(config, args.group, args.functor)
        if args.command == "mul-table":
            return cmd_mul_table(config, args.group, args.functor)
        if args.command == "units":
            return cmd_units(config, args.group)
        if args.command == "orth":
            return cmd_orth(config, args.group, args.functor)
        if args.command == "verify":
            return cmd_verify(config, args.suite)
        parser.error(f"unknown command {args.command!r}")
    except (CatalogError, GroupError, bs.RingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
