"""Command-line front end with a persistent JSON workspace.

Exit codes: 0 success, 1 a check/verify verdict was false under
--strict, 2 usage error, 3 engine error.  Mathematical failures are
outputs, not errors, unless --strict is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import PredicateFailed, RedcorError
from .ideals import ideal
from .modules import (describe_module, hom_module, is_zero_module,
                      iso_invariants, module_map, presentation,
                      smith_invariants, tensor_product)
from .rings import IntegerRing, ModularRing, parse_ring_spec, ring_to_json
from .torsion import (completion, is_complete, is_coreduced, is_reduced,
                      is_torsion, representability_report, torsion_part)
from .workspace import Workspace, load_workspace, save_workspace

DEFAULT_WORKSPACE = "./redcor.json"


def _load(args) -> Workspace:
    import os
    if os.path.exists(args.workspace):
        return load_workspace(args.workspace)
    return Workspace()


def _need_ring(w: Workspace):
    if w.ring is None:
        raise RedcorError("no ring set; run `redcor ring set <spec>` first")
    return w.ring


def _invariant_strings(m) -> list[str]:
    if isinstance(m.ring, (IntegerRing, ModularRing)):
        factors, free = iso_invariants(m)
        out = [str(d) for d in factors]
        out.extend("0" for _ in range(free))
        return out
    return []


def _complex_json(ring, complex_) -> dict:
    """{degree: {rank, differential matrix}} with element strings."""
    out = {}
    for p in range(complex_.lo, complex_.hi + 1):
        entry = {"rank": complex_.term(p).gens}
        d = complex_.diff(p)
        if d is not None:
            entry["differential"] = [[ring.fmt(x) for x in row]
                                     for row in d.matrix]
        out[str(p)] = entry
    return out


class Output:
    def __init__(self, args):
        self.as_json = getattr(args, "json", False)
        self.strict = getattr(args, "strict", False)
        self.verdict: bool | None = None

    def emit(self, claim: str, law: str, verdict, witness: dict, text: str):
        if verdict in (True, False):
            self.verdict = bool(verdict)
        if self.as_json:
            print(json.dumps(
                {"claim": claim, "law": law, "verdict": verdict,
                 "witness": witness},
                sort_keys=True, default=str))
        else:
            print(text)

    def exit_code(self) -> int:
        if self.strict and self.verdict is False:
            return 1
        return 0


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_ring(args, out: Output):
    w = _load(args)
    if args.action == "set":
        ring = parse_ring_spec(args.spec, order=args.order)
        w.set_ring(ring)
        save_workspace(w, args.workspace)
        out.emit(f"ring set to {ring}", "workspace", None,
                 ring_to_json(ring), f"ring: {ring}")
    else:
        ring = _need_ring(w)
        out.emit(f"workspace ring is {ring}", "workspace", None,
                 ring_to_json(ring), f"ring: {ring}")


def cmd_def(args, out: Output):
    w = _load(args)
    ring = _need_ring(w)
    if args.kind == "ideal":
        obj = ideal(ring, args.generators)
        w.define(args.name, obj)
        text = f"ideal {args.name} = {obj} with basis ({', '.join(ring.fmt(b) for b in obj.basis)})"
        witness = {"generators": [ring.fmt(g) for g in obj.generators],
                   "basis": [ring.fmt(b) for b in obj.basis]}
    elif args.kind == "module":
        relations = json.loads(args.relations) if args.relations else []
        obj = presentation(ring, args.gens, relations)
        w.define(args.name, obj)
        text = f"module {args.name}: {describe_module(obj)}"
        witness = {"gens": obj.gens, "relations": len(obj.relations)}
    else:
        src = w.get_module(args.source)
        tgt = w.get_module(args.target)
        obj = module_map(src, tgt, json.loads(args.matrix))
        w.define(args.name, obj)
        from .modules import map_analyze
        a = map_analyze(obj)
        text = (f"map {args.name}: {args.source} -> {args.target} "
                f"(well-defined: {a.well_defined})")
        witness = {"well_defined": a.well_defined}
    save_workspace(w, args.workspace)
    out.emit(f"defined {args.kind} {args.name}", "workspace", None, witness, text)


def cmd_list(args, out: Output):
    w = _load(args)
    from .ideals import Ideal
    from .modules import Presentation
    rows = []
    for name in sorted(w.objects):
        obj = w.objects[name]
        kind = ("ideal" if isinstance(obj, Ideal)
                else "module" if isinstance(obj, Presentation) else "map")
        rows.append({"name": name, "kind": kind})
    text = "\n".join(f"{r['name']}\t{r['kind']}" for r in rows) or "(empty)"
    out.emit("workspace contents", "workspace", None, {"objects": rows}, text)


def cmd_rm(args, out: Output):
    w = _load(args)
    w.remove(args.name)
    save_workspace(w, args.workspace)
    out.emit(f"removed {args.name}", "workspace", None, {}, f"removed {args.name}")


def cmd_compute(args, out: Output):
    w = _load(args)
    ring = _need_ring(w)
    op = args.op
    if op == "gamma":
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        g = torsion_part(m, i, args.bound)
        witness = {"stabilized_at": g.exponent,
                   "invariants": _invariant_strings(g.module),
                   "tower": [list(s.summary) for s in g.tower]}
        out.emit("torsion part of the module", "torsion-tower", None, witness,
                 f"torsion part: {describe_module(g.module)} "
                 f"(stabilized at k={g.exponent})")
    elif op == "lambda":
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        c = completion(m, i, args.bound)
        if c.stabilized:
            witness = {"stabilized_at": c.exponent,
                       "invariants": _invariant_strings(c.module)}
            text = (f"completion: {describe_module(c.module)} "
                    f"(stabilized at k={c.exponent})")
        else:
            witness = {"not_stabilized_within": c.bound}
            text = f"completion: tower still descending after k={c.bound}"
        out.emit("adic completion of the module", "completion-tower",
                 None, witness, text)
    elif op == "hom":
        m = w.get_module(args.module)
        n = w.get_module(args.other)
        h = hom_module(m, n)
        out.emit("Hom module", "hom", None,
                 {"invariants": _invariant_strings(h.module),
                  "generators": h.module.gens},
                 f"Hom: {describe_module(h.module)}")
    elif op == "tensor":
        m = w.get_module(args.module)
        n = w.get_module(args.other)
        t = tensor_product(m, n)
        out.emit("tensor product", "tensor", None,
                 {"invariants": _invariant_strings(t)},
                 f"tensor: {describe_module(t)}")
    elif op == "colon":
        from .modules import colon_annihilator
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        s = colon_annihilator(m, i)
        out.emit("annihilator submodule", "colon", None,
                 {"invariants": _invariant_strings(s.module)},
                 f"(0 : I) = {describe_module(s.module)}")
    elif op == "scalar":
        from .modules import scalar_submodule
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        s = scalar_submodule(m, i)
        out.emit("scalar submodule and quotient", "scalar", None,
                 {"submodule": _invariant_strings(s.submodule.module),
                  "quotient": _invariant_strings(s.quotient)},
                 f"IM = {describe_module(s.submodule.module)}; "
                 f"M/IM = {describe_module(s.quotient)}")
    elif op == "snf":
        m = w.get_module(args.module)
        sf = smith_invariants(m)
        out.emit("Smith normal form", "snf", None,
                 {"invariants": [str(d) for d in sf.invariants],
                  "free_rank": sf.free_rank},
                 f"invariants: {list(sf.invariants)}, free rank {sf.free_rank}")
    elif op == "koszul":
        from .complexes import koszul_complex
        elements = [ring.parse(s) for s in args.elements]
        k = koszul_complex(ring, elements)
        ranks = [t.gens for t in k.terms]
        out.emit("Koszul complex", "koszul", None,
                 {"interval": [k.lo, k.hi], "ranks": ranks,
                  "degrees": _complex_json(ring, k)},
                 f"Koszul complex on {len(elements)} elements, ranks {ranks}")
    elif op == "tor":
        from .complexes import tor
        m = w.get_module(args.module)
        n = w.get_module(args.other)
        t = tor(m, n, args.index)
        out.emit(f"Tor_{args.index}", "tor", None,
                 {"invariants": _invariant_strings(t),
                  "zero": is_zero_module(t)},
                 f"Tor_{args.index}: {describe_module(t)}")
    elif op == "resolution":
        from .complexes import free_resolution
        m = w.get_module(args.module)
        f = free_resolution(m, args.length)
        ranks = [t.gens for t in f.terms]
        out.emit("free resolution", "resolution", None,
                 {"ranks": ranks, "degrees": _complex_json(ring, f)},
                 f"free resolution ranks (deepest first): {ranks}")
    elif op == "matlis":
        from .duality import matlis_dual
        m = w.get_module(args.module)
        d = matlis_dual(m)
        out.emit("computable dual", "matlis", None,
                 {"invariants": _invariant_strings(d.dual),
                  "generators": d.dual.gens},
                 f"dual: {describe_module(d.dual)}")
    elif op == "yoneda":
        from .duality import yoneda_value
        i = w.get_ideal(args.ideal)
        y = yoneda_value(i)
        out.emit("natural-transformation value of the torsion functor",
                 "yoneda", y.conclusion,
                 {"value": _invariant_strings(y.value),
                  "unit_iso": y.unit_analysis.iso,
                  "companion_zero": y.companion_zero},
                 f"value: {describe_module(y.value)} "
                 f"(canonical map iso: {y.unit_analysis.iso})")
    else:
        raise RedcorError(f"unknown compute op {op}")


def cmd_check(args, out: Output):
    w = _load(args)
    ring = _need_ring(w)
    op = args.op
    if op in ("reduced", "coreduced"):
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        fn = is_reduced if op == "reduced" else is_coreduced
        verdict = fn(m, i)
        out.emit(f"module is I-{op}", f"{op}-predicate", verdict,
                 {"module": describe_module(m), "ideal": str(i)},
                 f"I-{op}: {str(verdict).lower()}")
    elif op == "torsion":
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        verdict = is_torsion(m, i, args.bound)
        out.emit("module is I-torsion", "torsion-predicate", verdict,
                 {"module": describe_module(m)},
                 f"I-torsion: {str(verdict).lower()}")
    elif op == "complete":
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        v = is_complete(m, i, args.bound)
        verdict = True if v.status == "true" else False if v.status == "false" else None
        text = (f"I-complete: {v.status}" if v.status != "unknown"
                else f"I-complete: unknown within bound {v.bound}")
        out.emit("module is I-complete", "complete-predicate", verdict,
                 {"status": v.status, "bound": v.bound}, text)
    elif op == "wpr":
        from .complexes import weak_proregularity_check
        elements = [ring.parse(s) for s in args.elements]
        v = weak_proregularity_check(ring, elements, args.i_bound, args.j_bound)
        witness = {"witnesses": [list(wit) for wit in v.witnesses],
                   "i_bound": v.i_bound, "j_bound": v.j_bound}
        if v.pro_zero:
            text = (f"pro-zero up to i={v.i_bound} (transition witnesses "
                    f"found through j={v.j_bound})")
        else:
            witness["inconclusive_at"] = list(v.failure)
            text = (f"inconclusive at (i={v.failure[0]}, p={v.failure[1]}) "
                    f"within j={v.failure[2]}")
        out.emit("Koszul cohomology towers are pro-zero", "weak-proregularity",
                 v.pro_zero, witness, text)
    elif op == "strongly-idempotent":
        from .complexes import strongly_idempotent_check
        i = w.get_ideal(args.ideal)
        v = strongly_idempotent_check(i, args.bound)
        if v.holds:
            text = f"strongly idempotent up to Tor index {v.bound}"
        else:
            text = f"fails at Tor index {v.fails_at}"
        out.emit("Tor_i(R/I, R/I) vanishes in positive degrees",
                 "strong-idempotency", v.holds,
                 {"bound": v.bound, "fails_at": v.fails_at}, text)
    else:
        raise RedcorError(f"unknown check op {op}")


def cmd_verify(args, out: Output):
    w = _load(args)
    op = args.op
    if op == "gm":
        from .duality import gm_adjunction_check
        m = w.get_module(args.module)
        n = w.get_module(args.other)
        i = w.get_ideal(args.ideal)
        try:
            r = gm_adjunction_check(m, n, i)
        except PredicateFailed as exc:
            out.emit("adjunction between completion and torsion",
                     "gm-adjunction", False,
                     {"precondition_failed": str(exc)},
                     f"precondition failed: {exc}")
            return
        if r.conclusion:
            text = f"GM adjunction: ISO (both sides {describe_module(r.left)})"
        else:
            a = r.analysis
            text = (f"GM adjunction: NOT ISO ({describe_module(r.left)} vs "
                    f"{describe_module(r.right)}; well-defined "
                    f"{a.well_defined}, injective {a.injective}, "
                    f"surjective {a.surjective})")
        out.emit("Hom(completion M, N) = Hom(M, torsion N)", "gm-adjunction",
                 r.conclusion,
                 {"left": _invariant_strings(r.left),
                  "right": _invariant_strings(r.right),
                  "well_defined": r.analysis.well_defined,
                  "injective": r.analysis.injective,
                  "surjective": r.analysis.surjective},
                 text)
    elif op == "mgm":
        from .duality import mgm_check
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        r = mgm_check(m, i)
        lines = []
        for c in r.clauses:
            status = "skipped" if not c.checked else ("ok" if c.verdict else "FAIL")
            lines.append(f"  [{status}] {c.name}")
        text = "MGM clauses:\n" + "\n".join(lines)
        out.emit("torsion/completion equivalence on the designated classes",
                 "mgm-equivalence", r.conclusion,
                 {"clauses": [{"name": c.name, "checked": c.checked,
                               "verdict": c.verdict} for c in r.clauses],
                  "reduced": r.reduced, "coreduced": r.coreduced,
                  "torsion": r.torsion, "complete": r.complete},
                 text)
    elif op == "squares":
        from .duality import duality_square_check
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        try:
            r = duality_square_check(m, i)
        except PredicateFailed as exc:
            out.emit("duality transport squares", "duality-squares", False,
                     {"precondition_failed": str(exc)},
                     f"precondition failed: {exc}")
            return
        lines = []
        for s in (r.torsion_square, r.completion_square):
            status = "skipped" if not s.checked else ("ok" if s.verdict else "FAIL")
            lines.append(f"  [{status}] {s.name}")
        out.emit("duality transport squares", "duality-squares", r.conclusion,
                 {"squares": [{"name": s.name, "checked": s.checked,
                               "verdict": s.verdict}
                              for s in (r.torsion_square, r.completion_square)]},
                 "duality squares:\n" + "\n".join(lines))
    elif op == "semigroup":
        from .duality import semigroup_table_check
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        r = semigroup_table_check(m, i)
        lines = [f"  [{'ok' if c.verdict else 'FAIL'}] {c.name}" for c in r.cells]
        out.emit("composition table of Hom(R/I,-) and R/I(x)-",
                 "semigroup-table", r.conclusion,
                 {"cells": [{"name": c.name, "verdict": c.verdict}
                            for c in r.cells],
                  "hom_value": _invariant_strings(r.hom_value),
                  "tensor_value": _invariant_strings(r.tensor_value)},
                 "semigroup table:\n" + "\n".join(lines))
    elif op == "transfer":
        from .duality import matlis_transfer_check
        m = w.get_module(args.module)
        i = w.get_ideal(args.ideal)
        r = matlis_transfer_check(m, i)
        text = (f"duality transfer: reduced<->coreduced "
                f"{'holds' if r.conclusion else 'FAILS'}")
        out.emit("reducedness transfers to coreducedness under the dual",
                 "matlis-transfer", r.conclusion,
                 {"reduced_matches": r.reduced_matches,
                  "coreduced_matches": r.coreduced_matches,
                  "global_checked": r.global_checked,
                  "global_matches": r.global_matches},
                 text)
    else:
        raise RedcorError(f"unknown verify op {op}")


def cmd_representable(args, out: Output):
    w = _load(args)
    m = w.get_module(args.module)
    i = w.get_ideal(args.ideal)
    try:
        r = representability_report(m, i)
    except PredicateFailed as exc:
        out.emit("representability of the functor towers", "representability",
                 False, {"precondition_failed": str(exc)},
                 f"precondition failed: {exc}")
        return
    out.emit("representability of the functor towers", "representability",
             r.verdict,
             {"reduced": r.reduced, "coreduced": r.coreduced,
              "torsion_side_iso": r.torsion_side.iso if r.torsion_side.checked else None,
              "completion_side_iso": (r.completion_side.iso
                                      if r.completion_side.checked else None)},
             f"representability: {'ok' if r.verdict else 'FAIL'}")


def cmd_report(args, out: Output):
    w = _load(args)
    if args.ring:
        ring = parse_ring_spec(args.ring)
    else:
        ring = _need_ring(w)
    from .plots import run_report
    result = run_report(ring, args.out, count=args.count, seed=args.seed)
    out.emit("battery report rendered", "report", None, result,
             f"wrote {result['csv']} and {len(result['figures'])} figures "
             f"({result['instances']} instances)")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    # the common flags are accepted both before and after the subcommand;
    # the SUPPRESS defaults keep the subparser copy from clobbering a
    # value given up front
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-w", "--workspace", default=argparse.SUPPRESS,
                        help="workspace file (default ./redcor.json)")
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit machine-readable JSON reports")
    common.add_argument("--strict", action="store_true",
                        default=argparse.SUPPRESS,
                        help="exit 1 when a mathematical verdict is false")

    parser = argparse.ArgumentParser(
        prog="redcor",
        description="Exact torsion/completion functor calculator and "
                    "verification harness for finitely presented modules.")
    parser.add_argument("-w", "--workspace", default=DEFAULT_WORKSPACE,
                        help="workspace file (default ./redcor.json)")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON reports")
    parser.add_argument("--strict", action="store_true",
                        help="exit 1 when a mathematical verdict is false")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(container, name, **kw):
        return container.add_parser(name, parents=[common], **kw)

    p = add(sub, "ring", help="set or show the workspace ring")
    p.add_argument("action", choices=["set", "show"])
    p.add_argument("spec", nargs="?",
                   help="ring spec: Z, Z/6, Q[x,y], F5[x,y]")
    p.add_argument("--order", default="grevlex",
                   choices=["lex", "grlex", "grevlex"])
    p.set_defaults(func=cmd_ring)

    p = add(sub, "def", help="define a named object")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = add(kinds, "ideal")
    k.add_argument("name")
    k.add_argument("generators", nargs="+", help="generator element strings")
    k.set_defaults(func=cmd_def)
    k = add(kinds, "module")
    k.add_argument("name")
    k.add_argument("--gens", type=int, required=True)
    k.add_argument("--relations", help="JSON matrix of element strings")
    k.set_defaults(func=cmd_def)
    k = add(kinds, "map")
    k.add_argument("name")
    k.add_argument("--source", required=True)
    k.add_argument("--target", required=True)
    k.add_argument("--matrix", required=True, help="JSON matrix of element strings")
    k.set_defaults(func=cmd_def)

    p = add(sub, "compute", help="run an operation")
    ops = p.add_subparsers(dest="op", required=True)

    def _mi(q, other=False, bound=False):
        q.add_argument("-m", "--module", required=True)
        if other:
            q.add_argument("-n", "--other", required=True)
        else:
            q.add_argument("-i", "--ideal", required=True)
        if bound:
            q.add_argument("--bound", type=int, default=64)
        q.set_defaults(func=cmd_compute)

    _mi(add(ops, "gamma"), bound=True)
    _mi(add(ops, "lambda"), bound=True)
    _mi(add(ops, "hom"), other=True)
    _mi(add(ops, "tensor"), other=True)
    _mi(add(ops, "colon"))
    _mi(add(ops, "scalar"))
    q = add(ops, "snf")
    q.add_argument("-m", "--module", required=True)
    q.set_defaults(func=cmd_compute)
    q = add(ops, "koszul")
    q.add_argument("elements", nargs="+")
    q.set_defaults(func=cmd_compute)
    q = add(ops, "tor")
    q.add_argument("-m", "--module", required=True)
    q.add_argument("-n", "--other", required=True)
    q.add_argument("--index", type=int, default=1)
    q.set_defaults(func=cmd_compute)
    q = add(ops, "resolution")
    q.add_argument("-m", "--module", required=True)
    q.add_argument("--length", type=int, default=2)
    q.set_defaults(func=cmd_compute)
    q = add(ops, "matlis")
    q.add_argument("-m", "--module", required=True)
    q.set_defaults(func=cmd_compute)
    q = add(ops, "yoneda")
    q.add_argument("-i", "--ideal", required=True)
    q.set_defaults(func=cmd_compute)

    p = add(sub, "check", help="decide a predicate")
    ops = p.add_subparsers(dest="op", required=True)
    for name in ("reduced", "coreduced"):
        q = add(ops, name)
        q.add_argument("-m", "--module", required=True)
        q.add_argument("-i", "--ideal", required=True)
        q.set_defaults(func=cmd_check)
    for name in ("torsion", "complete"):
        q = add(ops, name)
        q.add_argument("-m", "--module", required=True)
        q.add_argument("-i", "--ideal", required=True)
        q.add_argument("--bound", type=int, default=64)
        q.set_defaults(func=cmd_check)
    q = add(ops, "wpr")
    q.add_argument("elements", nargs="+")
    q.add_argument("--i-bound", type=int, default=4)
    q.add_argument("--j-bound", type=int, default=8)
    q.set_defaults(func=cmd_check)
    q = add(ops, "strongly-idempotent")
    q.add_argument("-i", "--ideal", required=True)
    q.add_argument("--bound", type=int, default=4)
    q.set_defaults(func=cmd_check)

    p = add(sub, "verify", help="run a verification harness")
    ops = p.add_subparsers(dest="op", required=True)
    q = add(ops, "gm")
    q.add_argument("-m", "--module", required=True)
    q.add_argument("-n", "--other", required=True)
    q.add_argument("-i", "--ideal", required=True)
    q.set_defaults(func=cmd_verify)
    for name in ("mgm", "squares", "semigroup", "transfer"):
        q = add(ops, name)
        q.add_argument("-m", "--module", required=True)
        q.add_argument("-i", "--ideal", required=True)
        q.set_defaults(func=cmd_verify)
    q = add(ops, "representable")
    q.add_argument("-m", "--module", required=True)
    q.add_argument("-i", "--ideal", required=True)
    q.set_defaults(func=cmd_representable)

    p = add(sub, "list", help="list workspace objects")
    p.set_defaults(func=cmd_list)
    p = add(sub, "rm", help="remove a workspace object")
    p.add_argument("name")
    p.set_defaults(func=cmd_rm)

    p = add(sub, "report",
                       help="render a battery report (CSV plus figures)")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.add_argument("--ring", help="ring spec (defaults to the workspace ring)")
    p.add_argument("--count", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args)
    try:
        args.func(args, out)
    except RedcorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # engine bug or bad input surface
        print(f"engine error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return out.exit_code()


if __name__ == "__main__":
    sys.exit(main())
