"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (not set-like, bad literal,
resource caps, failed selftest), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance, mset, setops
from .bisim import bisim, iterative_image, quotient
from .errors import HFSetsError, NotSetLike, limits
from .fol import (
    AXIOMS,
    Carrier,
    check_axiom,
    free_vars,
    parse_formula,
    sigma_count,
    tau_eval,
    to_text,
)
from .vset import Vset, enumerate_vsets, to_vset


def _emit(args, text: str, doc) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def carrier_spec(spec: str) -> str:
    """argparse type: validate the shape of a carrier spec without building it."""
    kind, _, rest = spec.partition(":")
    ok = (
        (kind == "vset" and rest.isdigit())
        or (kind == "mset" and len(rest.split(",")) == 2 and all(p.isdigit() for p in rest.split(",")))
        or (kind == "list" and bool(rest))
    )
    if not ok:
        raise argparse.ArgumentTypeError(
            f"bad carrier {spec!r}; expected vset:RANK, mset:RANK,WIDTH or list:FILE"
        )
    return spec


def parse_carrier(spec: str) -> Carrier:
    kind, _, rest = carrier_spec(spec).partition(":")
    if kind == "vset":
        return Carrier.vsets(int(rest))
    if kind == "mset":
        r, w = rest.split(",")
        return Carrier.msets(int(r), int(w))
    path = Path(rest)
    if not path.is_file():
        raise HFSetsError(f"carrier file {rest!r} not found")
    lines = [ln.strip() for ln in path.read_text().splitlines()]
    items = [mset.parse_literal(ln) for ln in lines if ln and not ln.startswith("#")]
    return Carrier.of(items, "list", spec)


def _literal(text: str) -> int:
    return mset.parse_literal(text)


def _set(text: str) -> Vset:
    return to_vset(mset.parse_literal(text))


def _binding(text: str):
    name, sep, lit = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected NAME=LITERAL, got {text!r}")
    return name.strip(), lit


# -- subcommands ---------------------------------------------------------------

def cmd_normalize(args):
    m = mset.parse_literal(args.literal)
    if args.mset:
        _emit(args, mset.to_literal(m), mset.to_json(m))
        return 0
    try:
        v = to_vset(m)
    except NotSetLike:
        if not args.dedup:
            raise
        v = iterative_image(m)
        print("note: deduplicated under --dedup", file=sys.stderr)
    _emit(args, str(v), mset.to_json(v.id))
    return 0


def cmd_eval(args):
    phi = parse_formula(args.formula)
    carrier = parse_carrier(args.carrier)
    val = {name: mset.parse_literal(lit) for name, lit in args.let}
    missing = sorted(free_vars(phi) - set(val))
    if missing:
        raise HFSetsError(f"free variables without a value: {', '.join(missing)}")
    if args.mode == "sigma":
        value = sigma_count(phi, val, carrier)
        text = str(value)
    else:
        value = tau_eval(phi, val, carrier)
        text = str(value).lower()
    _emit(args, text, {
        "formula": to_text(phi), "mode": args.mode, "carrier": carrier.label,
        "carrier_size": len(carrier), "value": value,
    })
    return 0


def cmd_check(args):
    report = check_axiom(args.axiom, parse_carrier(args.carrier), args.mode, args.formula)
    lines = [f"{report.name} [{report.mode}] over {report.carrier}: "
             f"{'holds' if report.holds else 'fails'} ({len(report.instances)} instances)"]
    for inst in report.instances:
        params = ", ".join(f"{k}={mset.to_literal(v)}" for k, v in inst.params.items())
        line = f"  {'ok  ' if inst.holds else 'FAIL'} {params or '-'}: value {_show(inst.value)}"
        if inst.witness is not None:
            line += f", witness {mset.to_literal(inst.witness)}"
            if inst.escapes:
                line += " (outside carrier)"
        if args.mode == "sigma" and any(v > 1 for v in inst.inner.values()):
            big = {mset.to_literal(z): v for z, v in inst.inner.items() if v > 1}
            line += ", inner counts > 1 at " + ", ".join(f"{z}: {v}" for z, v in big.items())
        lines.append(line)
    _emit(args, "\n".join(lines), report.as_dict())
    return 0 if report.holds else 1


def _show(v):
    return str(v).lower() if isinstance(v, bool) else str(v)


def cmd_enum(args):
    if args.msets:
        if args.width is None:
            raise HFSetsError("--msets needs --width")
        items = mset.enumerate_msets(args.rank, args.width)
    else:
        items = [v.id for v in enumerate_vsets(args.rank)]
    if args.count:
        _emit(args, str(len(items)), {"count": len(items)})
    else:
        lits = [mset.to_literal(x) for x in items]
        _emit(args, "\n".join(lits), {"elements": lits})
    return 0


def cmd_bisim(args):
    result = bisim(_literal(args.x), _literal(args.y))
    _emit(args, str(result).lower(), {"bisimilar": result})
    return 0


def cmd_setof(args):
    v = iterative_image(_literal(args.x))
    _emit(args, str(v), {"set": str(v)})
    return 0


def cmd_quotient(args):
    report = quotient(mset.enumerate_msets(args.rank, args.width))
    doc = report.as_dict()
    lines = [f"{len(report.classes)} classes (representatives injective: {str(report.injective).lower()})"]
    for cls in doc["classes"]:
        lines.append(f"{cls['representative']}: {' '.join(cls['members'])}")
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_ops(args):
    op = args.op
    if op == "empty":
        v = setops.empty()
    elif op == "nat":
        v = setops.nat(args.n)
    elif op == "pair":
        v = setops.pair_set(_set(args.x), _set(args.y))
    elif op == "opair":
        v = setops.ordered_pair(_set(args.x), _set(args.y))
    elif op == "union":
        v = setops.union(_set(args.x))
    elif op == "exp":
        v = setops.exp(_set(args.a), _set(args.b))
    else:
        x = _set(args.x)
        phi = parse_formula(args.formula)
        free = sorted(free_vars(phi))
        if len(free) != 1:
            raise HFSetsError(f"separating formula needs exactly one free variable, has {len(free)}")
        carrier = Carrier.of(mset.descendants(x.id), "vset", "closure")
        v = setops.separation(x, lambda z: tau_eval(phi, {free[0]: z.id}, carrier))
    _emit(args, str(v), {"set": str(v), "rank": mset.rank(v.id)})
    return 0


def cmd_selftest(args):
    results = acceptance.run(args.only or None)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return 0 if all(r.ok for r in results) else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="hfsets", description=__doc__.splitlines()[0])
    p.add_argument("--max-elements", type=int, default=limits.max_elements,
                   help="cap on enumerated fragments and function spaces (default %(default)s)")
    p.add_argument("--max-count-digits", type=int, default=limits.max_count_digits,
                   help="cap on sigma counts, in decimal digits (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common], help="canonical form of a literal")
    s.add_argument("literal")
    s.add_argument("--dedup", action="store_true", help="collapse duplicates instead of failing")
    s.add_argument("--mset", action="store_true", help="keep duplicates (multiset reading)")
    s.set_defaults(func=cmd_normalize)

    carrier_help = "vset:RANK, mset:RANK,WIDTH or list:FILE"
    s = sub.add_parser("eval", parents=[common], help="evaluate a formula")
    s.add_argument("formula")
    s.add_argument("--mode", choices=["sigma", "tau"], default="tau")
    s.add_argument("--carrier", type=carrier_spec, required=True, help=carrier_help)
    s.add_argument("--let", type=_binding, action="append", default=[], metavar="NAME=LITERAL",
                   help="value for a free variable")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", parents=[common], help="check an axiom instance by instance")
    s.add_argument("axiom", choices=AXIOMS)
    s.add_argument("--mode", choices=["sigma", "tau"], default="tau")
    s.add_argument("--carrier", type=carrier_spec, required=True, help=carrier_help)
    s.add_argument("--formula", help="separating property (free z) or replacement relation (free y, w)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("enum", parents=[common], help="enumerate a bounded fragment")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--vsets", action="store_true")
    kind.add_argument("--msets", action="store_true")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--width", type=int)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("bisim", parents=[common], help="are two multisets bisimilar")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_bisim)

    s = sub.add_parser("setof", parents=[common], help="iterative image of a multiset")
    s.add_argument("x")
    s.set_defaults(func=cmd_setof)

    s = sub.add_parser("quotient", parents=[common], help="bisimulation classes of a fragment")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--width", type=int, required=True)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("ops", help="build a set")
    ops = s.add_subparsers(dest="op", required=True)
    o = ops.add_parser("empty", parents=[common])
    o = ops.add_parser("nat", parents=[common])
    o.add_argument("n", type=int)
    for name in ("pair", "opair"):
        o = ops.add_parser(name, parents=[common])
        o.add_argument("x")
        o.add_argument("y")
    o = ops.add_parser("union", parents=[common])
    o.add_argument("x")
    o = ops.add_parser("sep", parents=[common])
    o.add_argument("x")
    o.add_argument("formula")
    o = ops.add_parser("exp", parents=[common])
    o.add_argument("a")
    o.add_argument("b")
    s.set_defaults(func=cmd_ops)

    s = sub.add_parser("selftest", help="run the acceptance checks")
    s.add_argument("--only", action="append", choices=[c.key for c in acceptance.CRITERIA])
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_elements < 1 or args.max_count_digits < 1:
        parser.error("caps must be positive")
    limits.max_elements = args.max_elements
    limits.max_count_digits = args.max_count_digits
    try:
        return args.func(args)
    except HFSetsError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
