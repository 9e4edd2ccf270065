"""Command-line front end.

Every subcommand reads gehms from file arguments (``-`` means standard
input) in the JSON format of :mod:`gehm.core` and writes JSON or
canonical polynomial text to standard output.  Exit codes: 0 success,
1 property failure in ``check``, 2 usage or input errors, 3 size-guard
violations.  ``GEHM_MAX_EDGES`` mirrors ``--max-edges``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import checks
from .core import (Gehm, GehmError, canonical_form, cycles, dumps, equivalent,
                   hyperedge_degrees, loads, stats)
from .invariants import (GuardExceeded, count_spanning_hypertrees, dichromatic,
                         dichromatic_delcon, dichromatic_multivariate,
                         evaluate_tutte, is_hyperforest, is_hypertree, tutte,
                         tutte_delcon)
from .ops import (contract, delete, disjoint_union, dual, join, partial_dual,
                  restrict, trial)
from .poly import MultiPoly, expand_xy
from .randgen import random_gehm
from .transition import medial_map, omega_t, phi_m, transition_poly
from .whitney import whitney


def _read_gehm(path: str) -> Gehm:
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as exc:
        raise GehmError(f"cannot read {path}: {exc}") from None


def _emit_poly(p: MultiPoly, as_json: bool) -> None:
    print(json.dumps(p.to_obj()) if as_json else str(p))


def _edge_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise GehmError(f"bad edge list {text!r}; expected i,j,...") from None


def _gedge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise GehmError(f"bad g-edge {text!r}; expected u,v")
    return int(parts[0]), int(parts[1])


def _resolve_max_edges(args) -> int | None:
    if getattr(args, "max_edges", None) is not None:
        return args.max_edges
    env = os.environ.get("GEHM_MAX_EDGES")
    return int(env) if env else None


def _guard_edges(gehm: Gehm, args) -> int | None:
    limit = _resolve_max_edges(args)
    ne = len(cycles(gehm, "br"))
    effective = limit if limit is not None else 20
    if ne > effective:
        raise GuardExceeded(
            f"{ne} hyperedges exceeds the guard of {effective};"
            " raise --max-edges to override")
    return limit


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gehm",
        description="hypermap polynomials on graph-encoded hypermaps")
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        p = sub.add_parser(name, **kw)
        return p

    def add_file(p, count=1):
        if count == 1:
            p.add_argument("file", nargs="?", default="-",
                           help="gehm JSON file ('-' for stdin)")
        else:
            p.add_argument("files", nargs=count, help="gehm JSON files")

    def add_poly_flags(p):
        p.add_argument("--json", action="store_true",
                       help="emit the polynomial as JSON instead of text")
        p.add_argument("--max-edges", type=int, default=None,
                       help="override the 2^e subset-sum guard")

    p = cmd("stats", help="numeric invariants of a gehm")
    add_file(p)

    p = cmd("canon", help="canonical form (hex)")
    add_file(p)

    p = cmd("iso", help="are two gehms equivalent?")
    add_file(p, count=2)

    for name, help_text in (("dual", "swap b and r"),
                            ("trial", "cycle the three colours")):
        p = cmd(name, help=help_text)
        add_file(p)

    p = cmd("pdual", help="partial dual on a hyperedge set")
    p.add_argument("--edges", required=True, help="comma-separated indices")
    add_file(p)

    for name in ("delete", "contract"):
        p = cmd(name, help=f"{name} one hyperedge")
        p.add_argument("--edge", type=int, required=True)
        add_file(p)

    p = cmd("restrict", help="keep only the named hyperedges")
    p.add_argument("--edges", required=True, help="comma-separated indices")
    add_file(p)

    p = cmd("union", help="disjoint union of two gehms")
    add_file(p, count=2)

    p = cmd("join", help="join two gehms along one g-edge each")
    p.add_argument("files", nargs=2, help="gehm JSON files")
    p.add_argument("--gedge", action="append", required=True,
                   help="u,v (give once per input, in order)")

    p = cmd("dichromatic", help="dichromatic polynomial Z(H; u, v)")
    p.add_argument("--multivariate", action="store_true")
    p.add_argument("--delcon", action="store_true",
                   help="compute by deletion-contraction instead")
    add_poly_flags(p)
    add_file(p)

    p = cmd("tutte", help="Tutte polynomial in X = sqrt(x-1), Y = sqrt(y-1)")
    p.add_argument("--delcon", action="store_true")
    p.add_argument("--as-xy", action="store_true",
                   help="expand to x and y (even exponents only)")
    p.add_argument("--eval", dest="eval_at", metavar="x,y",
                   help="exact evaluation at a rational point")
    add_poly_flags(p)
    add_file(p)

    p = cmd("hypertrees", help="hyperforest/hypertree status and count")
    p.add_argument("--max-edges", type=int, default=None)
    add_file(p)

    p = cmd("transition", help="transition polynomial of the medial map")
    p.add_argument("--omega-t", metavar="a,b,c",
                   help="three-pairing gem weights (ints or variable names)")
    p.add_argument("--dump-medial", action="store_true",
                   help="print the medial map instead of a polynomial")
    add_poly_flags(p)
    add_file(p)

    p = cmd("whitney", help="refinement-sum Whitney polynomial R(H; u, v)")
    p.add_argument("--max-refinements", type=int, default=None,
                   help="override the refinement-count guard")
    p.add_argument("--json", action="store_true")
    add_file(p)

    p = cmd("random", help="seeded random gehm")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--isolates", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = cmd("check", help="run randomised property suites")
    p.add_argument("--suite", default="all",
                   choices=sorted(checks.SUITES) + ["all"])
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-vertices", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    return top


def _run(args) -> int:
    cmd = args.command

    if cmd == "stats":
        g = _read_gehm(args.file)
        st = stats(g)
        print(json.dumps({
            "v": st.v, "e": st.e, "f": st.f, "k": st.k, "d": st.d,
            "euler_genus": st.euler_genus, "orientable": st.orientable,
            "degrees": hyperedge_degrees(g), "isolates": g.isolates,
        }))
    elif cmd == "canon":
        print(canonical_form(_read_gehm(args.file)).hex())
    elif cmd == "iso":
        a, b = (_read_gehm(f) for f in args.files)
        print(json.dumps({"equivalent": equivalent(a, b)}))
    elif cmd == "dual":
        print(dumps(dual(_read_gehm(args.file))))
    elif cmd == "trial":
        print(dumps(trial(_read_gehm(args.file))))
    elif cmd == "pdual":
        print(dumps(partial_dual(_read_gehm(args.file), _edge_list(args.edges))))
    elif cmd == "delete":
        print(dumps(delete(_read_gehm(args.file), args.edge)))
    elif cmd == "contract":
        print(dumps(contract(_read_gehm(args.file), args.edge)))
    elif cmd == "restrict":
        print(dumps(restrict(_read_gehm(args.file), _edge_list(args.edges))))
    elif cmd == "union":
        a, b = (_read_gehm(f) for f in args.files)
        print(dumps(disjoint_union(a, b)))
    elif cmd == "join":
        if len(args.gedge) != 2:
            raise GehmError("join needs exactly two --gedge options")
        a, b = (_read_gehm(f) for f in args.files)
        print(dumps(join(a, _gedge(args.gedge[0]), b, _gedge(args.gedge[1]))))
    elif cmd == "dichromatic":
        g = _read_gehm(args.file)
        limit = _guard_edges(g, args)
        if args.delcon:
            p = dichromatic_delcon(g)
        elif args.multivariate:
            p = dichromatic_multivariate(g, max_edges=limit)
        else:
            p = dichromatic(g, max_edges=limit)
        _emit_poly(p, args.json)
    elif cmd == "tutte":
        g = _read_gehm(args.file)
        limit = _guard_edges(g, args)
        if args.eval_at:
            try:
                xs, ys = args.eval_at.split(",")
                x, y = Fraction(xs), Fraction(ys)
            except (ValueError, ZeroDivisionError):
                raise GehmError(f"bad evaluation point {args.eval_at!r}") from None
            print(evaluate_tutte(g, x, y, max_edges=limit))
            return 0
        p = tutte_delcon(g) if args.delcon else tutte(g, max_edges=limit)
        if args.as_xy:
            p = expand_xy(p)
        _emit_poly(p, args.json)
    elif cmd == "hypertrees":
        g = _read_gehm(args.file)
        limit = _guard_edges(g, args)
        forest, tree = is_hyperforest(g), is_hypertree(g)
        count = (count_spanning_hypertrees(g, max_edges=limit)
                 if stats(g).k == 1 else None)
        print(json.dumps({"hyperforest": forest, "hypertree": tree,
                          "spanning_hypertrees": count}))
    elif cmd == "transition":
        g = _read_gehm(args.file)
        _guard_edges(g, args)
        if args.dump_medial:
            for mv in medial_map(g).vertices:
                print(json.dumps({
                    "hyperedge": mv.hyperedge,
                    "half_edges": list(mv.half_edges),
                    "faces": list(mv.gaps),
                }))
            print(json.dumps({"baseline_loops": medial_map(g).baseline_loops}))
            return 0
        if args.omega_t:
            parts = args.omega_t.split(",")
            if len(parts) != 3:
                raise GehmError("--omega-t needs three values a,b,c")
            weights = [
                MultiPoly.const(int(t)) if t.lstrip("-").isdigit()
                else MultiPoly.var(t)
                for t in parts
            ]
            p = transition_poly(medial_map(g), omega_t(g, *weights), "t")
        else:
            p = phi_m(g)
        _emit_poly(p, args.json)
    elif cmd == "whitney":
        g = _read_gehm(args.file)
        _emit_poly(whitney(g, max_refinements=args.max_refinements), args.json)
    elif cmd == "random":
        if args.vertices < 0 or args.vertices % 2 != 0:
            raise GehmError("--vertices must be a non-negative even number")
        rng = random.Random(args.seed)
        print(dumps(random_gehm(rng, args.vertices, args.isolates)))
    elif cmd == "check":
        names = sorted(checks.SUITES) if args.suite == "all" else [args.suite]
        failed = False
        for res in checks.run_suites(names, args.trials, args.max_vertices,
                                     args.seed):
            print(f"{res.name}: {'OK' if res.ok else 'FAIL'}"
                  f" ({res.trials} trials)")
            for line in res.info:
                print(f"  note: {line}")
            if not res.ok:
                failed = True
                print(f"  {res.failure}")
                print(f"  witness: {dumps(res.witness)}")
        if failed:
            return 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GehmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
