"""The ``legcalc`` command line tool.

Reports are JSON on stdout with sorted keys; commands that produce a
diagram emit canonical DSL text instead so results pipe straight back into
other subcommands (``legcalc family --type Q --j 2 | legcalc invariants -``).
Diagnostics go to stderr.  Exit codes: 0 success, 1 validation failure,
2 usage error.  ``-`` reads from stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from .alexander import alexander
from .corpus import splice_oracle_run
from .dsl import DslDocument, document_for, parse, serialize
from .errors import LegcalcError
from .front import FrontDiagram, stabilize
from .pattern import (
    PatternFront,
    gen_identity,
    gen_P,
    gen_Q,
    gen_R,
    pattern_stabilize,
)
from .pd import closure, crossing_switch, seifert_genus_upper, smooth
from .satellite import compose, iterate, satellite


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_single(path):
    return parse(_read_text(path)).single()


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def _emit_diagram(name, obj):
    sys.stdout.write(serialize(document_for(name, obj)))


def _invariants_obj(obj):
    out = {
        "tb": obj.tb,
        "rot": obj.rot,
        "writhe": obj.writhe,
        "cusps": obj.n_cusps,
    }
    if isinstance(obj, PatternFront):
        out["w"] = obj.winding
        out["strands"] = obj.seam_strands
    return out


def _pd_of(obj):
    if isinstance(obj, PatternFront):
        return closure(obj)
    return smooth(obj)


def cmd_invariants(args):
    doc = parse(_read_text(args.file))
    if len(doc) == 1:
        _emit_json(_invariants_obj(doc.single()))
    else:
        _emit_json({name: _invariants_obj(obj)
                    for name, obj in doc.definitions.items()})
    return 0


def cmd_family(args):
    j = args.j
    if args.type == "P":
        obj = gen_P(args.variant)
        name = f"p_{args.variant}"
    elif args.type == "Q":
        obj = gen_Q(j)
        name = f"q_{j}"
    elif args.type == "R":
        obj = gen_R(j)
        name = f"r_{j}"
    else:
        obj = gen_identity()
        name = "identity"
    _emit_diagram(name, obj)
    return 0


def cmd_satellite(args):
    p = _load_single(args.pattern)
    k = _load_single(args.knot)
    if not isinstance(p, PatternFront) or not isinstance(k, FrontDiagram):
        raise LegcalcError("satellite needs a pattern and a knot")
    res = satellite(p, k, allow_twist=args.allow_twist)
    print(f"twist: {res.twist}", file=sys.stderr)
    _emit_diagram("satellite", res.diagram)
    return 0


def cmd_compose(args):
    p = _load_single(args.outer)
    q = _load_single(args.inner)
    if not isinstance(p, PatternFront) or not isinstance(q, PatternFront):
        raise LegcalcError("compose needs two patterns")
    res = compose(p, q)
    print(f"twist: {res.twist}", file=sys.stderr)
    _emit_diagram("composed", res.diagram)
    return 0


def cmd_iterate(args):
    p = _load_single(args.pattern)
    if not isinstance(p, PatternFront):
        raise LegcalcError("iterate needs a pattern")
    res = iterate(p, args.times)
    _emit_diagram(f"iterate_{args.times}", res.diagram)
    return 0


def cmd_stabilize(args):
    obj = _load_single(args.file)
    sign = +1 if args.sign in ("+", "+1") else -1
    if isinstance(obj, PatternFront):
        out = pattern_stabilize(obj, sign, args.location)
    else:
        out = stabilize(obj, sign, args.location)
    _emit_diagram("stabilized", out)
    return 0


def cmd_smooth(args):
    _emit_json(_pd_of(_load_single(args.file)).to_json_obj())
    return 0


def cmd_switch(args):
    pd = crossing_switch(_pd_of(_load_single(args.file)), args.label)
    _emit_json(pd.to_json_obj())
    return 0


def cmd_alexander(args):
    delta = alexander(_pd_of(_load_single(args.file)))
    _emit_json({"alexander": str(delta),
                "degree": 0 if delta.is_zero() else delta.max_exp})
    return 0


def cmd_genus_bound(args):
    _emit_json({"seifert_genus_upper":
                seifert_genus_upper(_pd_of(_load_single(args.file)))})
    return 0


def cmd_bounds(args):
    b = bounds_mod.sb_bounds(args.tb, args.rot)
    _emit_json({"s_min": b.s_min, "tau_min": b.tau_min,
                "g4ex_min": b.g4ex_min, "g4_min": b.g4_min})
    return 0


def cmd_certificate(args):
    p = _load_single(args.pattern)
    k = _load_single(args.knot)
    if not isinstance(p, PatternFront) or not isinstance(k, FrontDiagram):
        raise LegcalcError("certificate needs a pattern and a knot")
    cert = bounds_mod.certificate(p, k, args.iterates)
    print(cert.to_json())
    return 0


def cmd_selftest(args):
    seed = int(os.environ.get("LEGCALC_SEED", "0"))
    pairs, failures = splice_oracle_run(seed, args.pairs)
    _emit_json({"seed": seed, "pairs": pairs, "failures": failures})
    return 0 if not failures else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="legcalc",
        description="Exact invariants of Legendrian fronts and satellites")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="tb/rot/writhe of definitions")
    p.add_argument("file")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("family", help="emit a generator pattern as DSL")
    p.add_argument("--type", required=True, choices=["P", "Q", "R", "identity"])
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--variant", choices=["a", "b"], default="a")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("satellite", help="splice a pattern into a knot")
    p.add_argument("--pattern", required=True)
    p.add_argument("--knot", required=True)
    p.add_argument("--allow-twist", action="store_true")
    p.set_defaults(fn=cmd_satellite)

    p = sub.add_parser("compose", help="compose two patterns")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("iterate", help="iterate a pattern operator")
    p.add_argument("--pattern", required=True)
    p.add_argument("--times", type=int, required=True)
    p.set_defaults(fn=cmd_iterate)

    p = sub.add_parser("stabilize", help="insert a stabilization zigzag")
    p.add_argument("file")
    p.add_argument("--sign", required=True, choices=["+", "-", "+1", "-1"])
    p.add_argument("--location", type=int, default=None)
    p.set_defaults(fn=cmd_stabilize)

    p = sub.add_parser("smooth", help="smooth to an oriented planar diagram")
    p.add_argument("file")
    p.set_defaults(fn=cmd_smooth)

    p = sub.add_parser("switch", help="switch a tagged crossing after smoothing")
    p.add_argument("file")
    p.add_argument("--label", required=True)
    p.set_defaults(fn=cmd_switch)

    p = sub.add_parser("alexander", help="Alexander polynomial")
    p.add_argument("file")
    p.set_defaults(fn=cmd_alexander)

    p = sub.add_parser("genus-bound", help="Seifert genus upper bound")
    p.add_argument("file")
    p.set_defaults(fn=cmd_genus_bound)

    p = sub.add_parser("bounds", help="slice-Bennequin lower bounds")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--rot", type=int, required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("certificate", help="distinctness certificate")
    p.add_argument("--pattern", required=True)
    p.add_argument("--knot", required=True)
    p.add_argument("--iterates", type=int, required=True)
    p.set_defaults(fn=cmd_certificate)

    p = sub.add_parser("selftest", help="randomized splice-formula corpus")
    p.add_argument("--pairs", type=int, default=200)
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except LegcalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
