"""Command line front end.

Every verb takes the shared flags --budget-nodes, --budget-extra,
--seed and --json after the verb name.  Exit codes: 0 success (or
Equal), 1 Distinct, 2 bad input, 3 Unknown, 4 audit violation.
"""

import argparse
import json
import os
import random
import sys

from . import __version__
from .census import CENSUS_CAP, census_record, write_census
from .diagrams import (
    DiagramError,
    FlatDiagram,
    FlatLinkDiagram,
    GaussDiagram,
    VirtualLinkDiagram,
    lattice_diagram,
    parse_gauss_code,
    random_gauss_diagram,
    serialize,
    shadow,
    writhe,
)
from .harness import axiom_audit, move_invariance_suite
from .indices import carter_genus, flat_linking_number, ind_flat, project
from .invariants import (
    F_invariant,
    L_invariant,
    dwrithe,
    flat_module_invariant,
    flat_writhe,
    lkn_polynomial,
    wp0_polynomial,
    writhe_polynomial,
)
from .moves import Budget, DEFAULT_BUDGET, canonical_code, equivalent, simplify
from .smoothing import smooth0, smooth0_flat, smooth1, smooth1_flat

EX_OK = 0
EX_DISTINCT = 1
EX_INPUT = 2
EX_UNKNOWN = 3
EX_VIOLATION = 4

KINDS = {
    "virtual": "virtual-knot",
    "virtual-knot": "virtual-knot",
    "flat": "flat-knot",
    "flat-knot": "flat-knot",
    "flat-link": "flat-link",
    "virtual-link": "virtual-link",
}

DWRITHE_RANGE = (1, 2, 3)


class CliError(Exception):
    """Bad input; main() turns these into exit code 2."""


def _budget(args):
    nodes = args.budget_nodes
    if nodes is None:
        env = os.environ.get("VK_BUDGET_NODES")
        nodes = int(env) if env else DEFAULT_BUDGET.max_nodes
    extra = args.budget_extra
    if extra is None:
        extra = DEFAULT_BUDGET.max_extra
    if nodes < 0 or extra < 0:
        raise CliError("budget values must be nonnegative")
    return Budget(max_nodes=nodes, max_extra=extra)


def _load(code, kind):
    try:
        return parse_gauss_code(code, KINDS[kind])
    except DiagramError as e:
        raise CliError(str(e))


def _module_text(elem):
    """Render a module element, flagging budget-limited ambiguity.

    Two keys that the reducer could not tell apart share kind, mode and
    invariant tuple; the element is then only an upper bound on the
    true class count.
    """
    seen = set()
    ambiguous = False
    for fp in elem.keys():
        probe = (fp.kind, fp.mode, fp.invariant_tuple)
        if probe in seen:
            ambiguous = True
            break
        seen.add(probe)
    text = str(elem)
    if ambiguous:
        text += " (upper-bound form)"
    return text


def _module_json(elem):
    return {
        "keys": len(elem),
        "coeffs": [c for _, c in elem.items()],
        "text": _module_text(elem),
    }


def _emit(lines, payload, args):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- inv

def _inv_virtual_knot(d, budget, seed):
    rec = census_record(d, budget=budget, seed=seed)
    f = F_invariant(d, budget)
    el = L_invariant(d, budget)
    lines = [
        "kind = virtual-knot",
        "chords = %d" % d.n,
        "writhe = %d" % writhe(d),
        "W = %s" % writhe_polynomial(d),
    ]
    lines += ["dJ%d = %d" % (n, dwrithe(d, n)) for n in DWRITHE_RANGE]
    lines += [
        "L1 = %s" % lkn_polynomial(d, 1),
        "L2 = %s" % lkn_polynomial(d, 2),
        "wp0 = %s" % wp0_polynomial(d),
        "shadow_genus = %d" % carter_genus(shadow(d)),
        "F = %s" % _module_text(f),
        "L = %s" % _module_text(el),
    ]
    return lines, rec


def _inv_flat_knot(d, budget, seed):
    fw = flat_writhe(d)
    per_chord = [(c, ind_flat(d, c)) for c in sorted(d.chord_ids)]
    mods = {
        "F_sign": flat_module_invariant(d, "sign", "knot", budget),
        "L_sign": flat_module_invariant(d, "sign", "link", budget),
        "L_ind": flat_module_invariant(d, "index", "link", budget),
    }
    lines = [
        "kind = flat-knot",
        "chords = %d" % d.n,
        "flat_writhe = %d" % fw,
        "genus = %d" % carter_genus(d),
    ]
    lines += ["ind[%d] = %d" % (c, v) for c, v in per_chord]
    lines += ["%s = %s" % (name, _module_text(mods[name]))
              for name in ("F_sign", "L_sign", "L_ind")]
    payload = {
        "kind": "flat-knot",
        "chords": d.n,
        "flat_writhe": fw,
        "genus": carter_genus(d),
        "ind": {str(c): v for c, v in per_chord},
        "modules": {k: _module_json(v) for k, v in mods.items()},
        "meta": _meta(budget, seed),
    }
    return lines, payload


def _inv_flat_link(d, budget, seed):
    lk = flat_linking_number(d)
    lines = [
        "kind = flat-link",
        "chords = %d" % d.n,
        "lk = %d" % lk,
    ]
    payload = {
        "kind": "flat-link",
        "chords": d.n,
        "lk": lk,
        "meta": _meta(budget, seed),
    }
    return lines, payload


def _inv_virtual_link(d, budget, seed):
    lk = flat_linking_number(shadow(d))
    lines = [
        "kind = virtual-link",
        "chords = %d" % d.n,
        "writhe = %d" % writhe(d),
        "lk = %d" % lk,
    ]
    payload = {
        "kind": "virtual-link",
        "chords": d.n,
        "writhe": writhe(d),
        "lk": lk,
        "meta": _meta(budget, seed),
    }
    return lines, payload


def _meta(budget, seed):
    return {
        "seed": seed,
        "budget": [budget.max_nodes, budget.max_extra],
        "version": __version__,
    }


def cmd_inv(args):
    budget = _budget(args)
    d = _load(args.code, args.kind)
    handler = {
        GaussDiagram: _inv_virtual_knot,
        FlatDiagram: _inv_flat_knot,
        FlatLinkDiagram: _inv_flat_link,
        VirtualLinkDiagram: _inv_virtual_link,
    }[type(d)]
    lines, payload = handler(d, budget, args.seed)
    _emit(lines, payload, args)
    return EX_OK


# ---------------------------------------------------------------- gen

def cmd_gen(args):
    if args.family == "lattice":
        p, q = args.params
        if p < 1 or q < 1:
            raise CliError("lattice parameters must be positive")
        code = canonical_code(lattice_diagram(p, q), "oriented")
    else:
        n, seed = args.params
        if n < 0:
            raise CliError("chord count must be nonnegative")
        code = serialize(random_gauss_diagram(n, random.Random(seed)))
    _emit([code], {"code": code}, args)
    return EX_OK


# ------------------------------------------------------------ compare

def cmd_compare(args):
    budget = _budget(args)
    a = _load(args.code_a, args.kind)
    b = _load(args.code_b, args.kind)
    mode = args.mode if isinstance(a, (FlatDiagram, FlatLinkDiagram)) else None
    verdict = equivalent(a, b, orientation_mode=mode, budget=budget)
    status = verdict.status.capitalize()
    lines = [status]
    if verdict.reason:
        lines.append("reason: %s" % verdict.reason)
    if verdict.witness:
        steps = verdict.witness.splitlines()
        lines.append("witness: %d steps" % len(steps))
        lines += ["  " + step for step in steps]
    payload = {
        "status": status,
        "reason": verdict.reason,
        "witness": verdict.witness,
    }
    _emit(lines, payload, args)
    return {"equal": EX_OK, "distinct": EX_DISTINCT}.get(
        verdict.status, EX_UNKNOWN)


# ------------------------------------------------- smooth and friends

def cmd_smooth(args):
    d = _load(args.code, args.kind)
    table = {
        (GaussDiagram, 0): smooth0,
        (GaussDiagram, 1): smooth1,
        (FlatDiagram, 0): smooth0_flat,
        (FlatDiagram, 1): smooth1_flat,
    }
    op = table.get((type(d), args.resolution))
    if op is None:
        raise CliError("smoothing needs a knot diagram (virtual or flat)")
    if args.chord not in d.chord_ids:
        raise CliError("no chord %d in the diagram" % args.chord)
    code = serialize(op(d, args.chord))
    _emit([code], {"code": code}, args)
    return EX_OK


def cmd_project(args):
    d = _load(args.code, "virtual")
    if args.n < 0:
        raise CliError("n must be nonnegative")
    code = serialize(project(d, args.n))
    _emit([code], {"code": code}, args)
    return EX_OK


def cmd_simplify(args):
    budget = _budget(args)
    d = _load(args.code, args.kind)
    out = simplify(d, budget)
    code = serialize(out)
    lines = ["%s" % code, "chords: %d -> %d" % (d.n, out.n)]
    _emit(lines, {"code": code, "chords_in": d.n, "chords_out": out.n}, args)
    return EX_OK


# ------------------------------------------------------- check-axioms

def _summary_json(s):
    return {
        "trials": s.trials,
        "violations": s.violations,
        "counters": dict(sorted(s.counters.items())),
    }


def cmd_check_axioms(args):
    seed = args.seed if args.seed is not None else 2026
    kwargs = dict(trials=args.trials, seed=seed,
                  max_chords=args.max_chords, sabotage=args.sabotage)
    audit = axiom_audit(**kwargs)
    suite = move_invariance_suite(**kwargs)
    lines = list(audit.lines()) + list(suite.lines())
    total = audit.violations + suite.violations
    lines.append("total violations = %d" % total)
    payload = {
        "axiom_audit": _summary_json(audit),
        "move_invariance": _summary_json(suite),
        "total_violations": total,
        "sabotage": args.sabotage,
        "seed": seed,
    }
    _emit(lines, payload, args)
    return EX_VIOLATION if total else EX_OK


# -------------------------------------------------------------- census

def cmd_census(args):
    budget = _budget(args)
    seed = args.seed if args.seed is not None else 0
    if args.max_chords < 0 or args.max_chords > CENSUS_CAP:
        raise CliError("max chords must be between 0 and %d" % CENSUS_CAP)
    try:
        n = write_census(args.max_chords, args.out, budget=budget, seed=seed)
    except OSError as e:
        raise CliError(str(e))
    line = "wrote %d records to %s" % (n, args.out)
    _emit([line], {"records": n, "path": args.out}, args)
    return EX_OK


# -------------------------------------------------------------- parser

def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--budget-nodes", type=int, default=None,
                        help="search node cap (or env VK_BUDGET_NODES)")
    shared.add_argument("--budget-extra", type=int, default=None,
                        help="chords above the floor the search may add")
    shared.add_argument("--seed", type=int, default=None)
    shared.add_argument("--json", action="store_true",
                        help="one JSON object instead of text lines")

    p = argparse.ArgumentParser(prog="vk",
                                description="invariants of virtual and "
                                            "flat knots from Gauss codes")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("inv", parents=[shared],
                        help="print invariants of one diagram")
    sp.add_argument("--kind", choices=sorted(KINDS), default="virtual")
    sp.add_argument("code")
    sp.set_defaults(func=cmd_inv)

    sp = sub.add_parser("gen", parents=[shared],
                        help="emit a diagram from a named family")
    sp.add_argument("family", choices=("lattice", "random"))
    sp.add_argument("params", type=int, nargs=2,
                    metavar=("P", "Q"),
                    help="lattice: p q; random: chords seed")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("compare", parents=[shared],
                        help="decide whether two codes present one class")
    sp.add_argument("--kind", choices=sorted(KINDS), default="virtual")
    sp.add_argument("--mode", choices=("oriented", "unoriented"),
                    default="oriented",
                    help="orientation handling for flat kinds")
    sp.add_argument("code_a")
    sp.add_argument("code_b")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("smooth", parents=[shared],
                        help="smooth one crossing")
    sp.add_argument("--kind", choices=("virtual", "virtual-knot",
                                       "flat", "flat-knot"),
                    default="virtual")
    sp.add_argument("--chord", type=int, required=True)
    sp.add_argument("--resolution", type=int, choices=(0, 1), default=0,
                    help="0 keeps one circle, 1 splits into two")
    sp.add_argument("code")
    sp.set_defaults(func=cmd_smooth)

    sp = sub.add_parser("project", parents=[shared],
                        help="keep chords whose index is a multiple of n")
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("code")
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("simplify", parents=[shared],
                        help="reduce a diagram within the move budget")
    sp.add_argument("--kind", choices=sorted(KINDS), default="virtual")
    sp.add_argument("code")
    sp.set_defaults(func=cmd_simplify)

    sp = sub.add_parser("check-axioms", parents=[shared],
                        help="run the index axiom audit and the move "
                             "invariance suite")
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--max-chords", type=int, default=6)
    sp.add_argument("--sabotage", choices=("sign-flip", "arrow-flip"),
                    default=None,
                    help="deliberately corrupt one side of each trial")
    sp.set_defaults(func=cmd_check_axioms)

    sp = sub.add_parser("census", parents=[shared],
                        help="write the small-diagram census as JSONL")
    sp.add_argument("--max-chords", type=int, default=4)
    sp.add_argument("--out", default="census.jsonl")
    sp.set_defaults(func=cmd_census)

    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return EX_INPUT


if __name__ == "__main__":
    sys.exit(main())
