"""Command-line front end.

Every invocation prints one record (or, with ``--stream``, one record per
line) with keys ``schema_version``, ``command``, ``inputs``, ``result`` and
optionally ``certificates``. Integers beyond 2^53 - 1 are written as decimal
strings. ``--table`` prints the same result as aligned text.

Exit codes: 0 success, 2 invalid input, 3 search bound exhausted. Errors go
to stderr as a JSON record with an ``error`` key.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import aw, chern, cobordism, families, fgab, numtheory, orbitspace
from .errors import OrbitkitError, SearchBoundError

SCHEMA_VERSION = "1"
MAX_SAFE_INT = 2**53 - 1
SIEVE_ENV = "ORBITKIT_SIEVE_LIMIT"


class UsageError(OrbitkitError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def jsonable(x: Any) -> Any:
    """Convert to plain JSON types, turning unsafe integers into strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > MAX_SAFE_INT else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def serialize(record: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(record, sort_keys=True, separators=(",", ":"))
    return json.dumps(record, sort_keys=True, indent=2)


def make_record(command: str, inputs: dict, result: Any, certificates=None) -> dict:
    rec = {"schema_version": SCHEMA_VERSION, "command": command,
           "inputs": inputs, "result": result}
    if certificates is not None:
        rec["certificates"] = certificates
    return jsonable(rec)


# -- payload builders --------------------------------------------------------

def _pair(w: aw.WeightPair) -> list[int]:
    return [w.p1, w.p2]


def _group(g: fgab.FgAbGroup) -> dict:
    return {"rank": g.rank, "torsion": list(g.torsion), "text": str(g)}


def _boundary(b: orbitspace.BoundaryComponent) -> dict:
    return {"label": b.label, "dimension": b.dimension, "orbit_kind": b.orbit_kind,
            "slice_group": b.slice_group, "determined": not b.symbolic}


def _m11(inst: families.M11Instance) -> dict:
    return {"orbit1": _pair(inst.orbit1), "orbit2": _pair(inst.orbit2),
            "order1": inst.order1, "order2": inst.order2}


def _m13(inst: families.M13Instance) -> dict:
    return {"orbit1": _pair(inst.orbit1), "orbit2": _pair(inst.orbit2),
            "order": inst.order, "h4": _group(inst.h4), "non_double": inst.non_double}


def _certificate(i, j, cert: families.DistinctnessCertificate) -> dict:
    return {"i": i, "j": j, "prime": cert.prime, "interval_i": list(cert.interval_i),
            "interval_j": list(cert.interval_j), "valid": cert.valid}


def _warnings(*pairs: aw.WeightPair) -> list[str]:
    out = []
    for w in pairs:
        if aw.aw_order(w) == 1:
            out.append(f"{w} has order 1; Kruggel's criterion is applied formally")
        elif w.degenerate:
            out.append(f"{w} has a zero weight")
    return out


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise OrbitkitError(f"expected comma-separated integers, got {text!r}") from None


def _parse_matrix(text: str, cols: int | None) -> fgab.IntMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrbitkitError(f"matrix is not valid JSON: {exc.msg} at offset {exc.pos}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows) or \
            not all(isinstance(e, int) and not isinstance(e, bool) for r in rows for e in r):
        raise OrbitkitError("matrix must be a JSON list of integer lists")
    if not rows and cols is None:
        cols = 0
    return fgab.IntMatrix.from_rows(rows, cols)


# -- command handlers ---------------------------------------------------------
# each returns (inputs, result, certificates) or a list of such for streaming

def cmd_aw(args):
    w = aw.WeightPair(args.p1, args.p2)
    if args.action == "order":
        return {"w": _pair(w)}, {"order": aw.aw_order(w), "warnings": _warnings(w)}, None
    if args.action == "canon":
        orbit = sorted(aw.symmetry_orbit(w), key=aw.canonical_key)
        return ({"w": _pair(w)},
                {"canonical": _pair(aw.canonical_form(w)), "orbit": [_pair(x) for x in orbit]},
                None)
    if args.q is None or len(args.q) != 2:
        raise UsageError("aw htpy needs four integers: P1 P2 Q1 Q2")
    v = aw.WeightPair(*args.q)
    nw, nv = aw.aw_order(w), aw.aw_order(v)
    result = {"equivalent": aw.homotopy_equivalent(w, v), "order_w": nw, "order_v": nv,
              "same_order": nw == nv, "residue_w": aw.kruggel_residue(w),
              "residue_v": aw.kruggel_residue(v),
              "negated_residue_v": (-aw.kruggel_residue(v)) % nv,
              "warnings": _warnings(w, v)}
    return {"w": _pair(w), "v": _pair(v)}, result, None


def cmd_loeschian(args):
    if args.action == "check":
        return ({"n": args.n},
                {"representable": numtheory.is_representable_coprime(args.n)}, None)
    if args.action == "reps":
        reps = numtheory.coprime_representations(args.n, args.scan_limit)
        complete = args.scan_limit is None or args.scan_limit >= numtheory.scan_radius(args.n)
        return ({"n": args.n},
                {"representations": [_pair(r) for r in reps], "complete": complete}, None)
    primes = numtheory.primes_1_mod_3(args.count, args.lower_bound, args.sieve_limit)
    return {"count": args.count, "lower_bound": args.lower_bound}, {"primes": primes}, None


def cmd_chern(args):
    if args.action == "classes":
        p = chern.WeightVector(_parse_vector(args.weights), args.group)
        return ({"weights": list(p.weights), "group": args.group},
                {"classes": chern.chern_classes(p)}, None)
    if args.action == "iso":
        p = chern.WeightVector(_parse_vector(args.p), args.group)
        q = chern.WeightVector(_parse_vector(args.q), args.group)
        return ({"p": list(p.weights), "q": list(q.weights), "group": args.group, "m": args.m},
                {"isomorphic": chern.bundles_isomorphic(p, q, args.m),
                 "classes_p": chern.chern_classes(p), "classes_q": chern.chern_classes(q)},
                None)
    w, v = aw.WeightPair(args.p1, args.p2), aw.WeightPair(args.q1, args.q2)
    return ({"w": _pair(w), "v": _pair(v)},
            {"exists": chern.m13_exists(w, v), "order_w": aw.aw_order(w),
             "order_v": aw.aw_order(v)}, None)


def cmd_cobordism(args):
    s = cobordism.parse_space(args.space)
    if args.action == "sw":
        if args.partition:
            part = cobordism.Partition(_parse_vector(args.partition))
            return ({"space": str(s), "partition": list(part.parts)},
                    {"number": cobordism.sw_number(s, part, args.direct_x3)}, None)
        nums = cobordism.sw_numbers(s, args.direct_x3)
        return ({"space": str(s)},
                {"dimension": s.dim,
                 "numbers": [{"partition": list(k), "value": v} for k, v in nums.items()]},
                None)
    if args.action == "bounds":
        return {"space": str(s)}, {"bounds": cobordism.bounds(s), "dimension": s.dim}, None
    t = cobordism.parse_space(args.other)
    return ({"space": str(s), "other": str(t)},
            {"cobordant": cobordism.cobordant(s, t), "dimension": s.dim}, None)


def cmd_orbitspace(args):
    c = args.cohomogeneity
    if args.action == "boundaries":
        comps = orbitspace.possible_boundaries(c, args.kind)
        return {"c": c, "kind": args.kind}, {"boundaries": [_boundary(b) for b in comps]}, None
    if args.action == "unique":
        comps = orbitspace.unique_orbit_boundaries(c)
        return {"c": c}, {"boundaries": [_boundary(b) for b in comps]}, None
    if args.action == "pairs":
        pairs = orbitspace.two_orbit_pairings(c)
        return ({"c": c},
                {"pairs": [{"first": _boundary(p.first), "second": _boundary(p.second),
                            "determined": p.determined} for p in pairs]}, None)
    rule = orbitspace.achievable_orbit_counts(c, args.kind)
    return ({"c": c, "kind": args.kind},
            {"asserted": rule.asserted, "minimum": rule.minimum, "even_only": rule.even_only,
             "description": str(rule)}, None)


def cmd_family(args):
    if args.action == "m11":
        fam = families.generate_m11_family(args.count, args.sieve_limit, args.scan_limit)
        certs = [_certificate(i, j, c) for (i, j), c in sorted(fam.certificates.items())]
        inputs = {"count": args.count}
        if args.stream:
            out = []
            for k, inst in enumerate(fam.instances):
                mine = [c for c in certs if c["j"] == k]
                out.append((dict(inputs, index=k), _m11(inst), mine))
            return out
        return (inputs, {"instances": [_m11(i) for i in fam.instances], "primes": fam.primes},
                certs)
    if args.action == "m13":
        insts = families.generate_m13_family(args.count, args.sieve_limit, args.scan_limit)
        inputs = {"count": args.count}
        if args.stream:
            return [(dict(inputs, index=k), _m13(i), None) for k, i in enumerate(insts)]
        return inputs, {"instances": [_m13(i) for i in insts]}, None
    w, v = aw.WeightPair(args.p1, args.p2), aw.WeightPair(args.q1, args.q2)
    return ({"w": _pair(w), "v": _pair(v)},
            {"h4": _group(families.h4_m13(w, v)), "order": aw.aw_order(w)}, None)


def cmd_fgab(args):
    if args.action == "tensor":
        g = fgab.FgAbGroup.from_orders(*args.orders)
        return ({"orders": args.orders, "prime": args.prime},
                {"group": _group(g), "dimension": fgab.tensor_dim(g, args.prime)}, None)
    m = _parse_matrix(args.matrix, args.cols)
    inputs = {"matrix": m.to_rows(), "rows": m.rows, "cols": m.cols}
    if args.action == "snf":
        d, u, v = fgab.smith_normal_form(m)
        return inputs, {"diagonal": d, "U": u.to_rows(), "V": v.to_rows()}, None
    return inputs, {"cokernel": _group(fgab.cokernel(m))}, None


# -- parser -------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     default=default("json"), help="JSON output (default)")
    fmt.add_argument("--table", dest="format", action="store_const", const="table",
                     default=default("json"), help="aligned text output")
    p.add_argument("--sieve-limit", type=int, default=default(None), metavar="N",
                   help=f"prime sieve bound (env {SIEVE_ENV}; default "
                        f"{numtheory.DEFAULT_SIEVE_LIMIT})")
    p.add_argument("--scan-limit", type=int, default=default(None), metavar="N",
                   help="cap on the representation scan radius (default: complete)")
    p.add_argument("--out", default=default(None), metavar="FILE", help="write output here")


def _pq(p):
    for name in ("p1", "p2", "q1", "q2"):
        p.add_argument(name, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbitkit", description=__doc__.split("\n")[0])
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="section", required=True, parser_class=_Parser)

    def leaf(group_parser, name, handler, help_text):
        p = group_parser.add_parser(name, help=help_text)
        _add_common(p, suppress=True)
        p.set_defaults(handler=handler, action=name)
        return p

    g = sub.add_parser("aw", help="Aloff-Wallach invariants").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, text in (("order", "order of H^4"), ("canon", "canonical weights")):
        p = leaf(g, name, cmd_aw, text)
        p.add_argument("p1", type=int)
        p.add_argument("p2", type=int)
        p.set_defaults(q=None)
    p = leaf(g, "htpy", cmd_aw, "Kruggel homotopy test")
    p.add_argument("p1", type=int)
    p.add_argument("p2", type=int)
    p.add_argument("q", type=int, nargs=2, metavar="Q")

    g = sub.add_parser("loeschian", help="a^2+ab+b^2 and primes 1 mod 3").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    leaf(g, "check", cmd_loeschian, "coprime representability").add_argument("n", type=int)
    leaf(g, "reps", cmd_loeschian, "coprime representations").add_argument("n", type=int)
    p = leaf(g, "primes", cmd_loeschian, "primes = 1 mod 3")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--lower-bound", type=int, default=0)

    g = sub.add_parser("chern", help="Chern classes of weight embeddings").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "classes", cmd_chern, "total Chern class")
    p.add_argument("weights", help="comma-separated, e.g. 1,1,-2")
    p.add_argument("--group", choices=("U", "SU"), default="U")
    p = leaf(g, "iso", cmd_chern, "bundle isomorphism over CP^m")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--group", choices=("U", "SU"), default="U")
    _pq(leaf(g, "m13-exists", cmd_chern, "existence of M13"))

    g = sub.add_parser("cobordism", help="SW numbers and cobordism").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "sw", cmd_cobordism, "Stiefel-Whitney numbers")
    p.add_argument("space")
    p.add_argument("--partition", help="comma-separated parts; default: all partitions")
    p.add_argument("--direct-x3", action="store_true",
                   help="evaluate X(1) in its own ring instead of RP(2)*CP(1)*CP(1)")
    leaf(g, "bounds", cmd_cobordism, "is the space a boundary").add_argument("space")
    p = leaf(g, "cobordant", cmd_cobordism, "are two spaces cobordant")
    p.add_argument("space")
    p.add_argument("other")

    g = sub.add_parser("orbitspace", help="orbit-space boundary components").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, text in (("boundaries", "table entries"), ("unique", "single-orbit boundaries"),
                       ("pairs", "two-orbit pairings"), ("counts", "achievable orbit counts")):
        p = leaf(g, name, cmd_orbitspace, text)
        p.add_argument("cohomogeneity", type=int)
        if name == "boundaries":
            p.add_argument("--kind", choices=("singular", "exceptional", "both"), default="both")
        elif name == "counts":
            p.add_argument("--kind", choices=("singular", "exceptional"), default="singular")

    g = sub.add_parser("family", help="M11 and M13 families").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name in ("m11", "m13"):
        p = leaf(g, name, cmd_family, f"generate the {name.upper()} family")
        p.add_argument("--count", type=int, required=True)
        p.add_argument("--stream", action="store_true", help="one record per line")
    _pq(leaf(g, "h4-m13", cmd_family, "H^4 of M13"))

    g = sub.add_parser("fgab", help="integer matrices and abelian groups").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, text in (("snf", "Smith normal form"), ("coker", "cokernel")):
        p = leaf(g, name, cmd_fgab, text)
        p.add_argument("matrix", help="JSON rows, e.g. [[2,4],[0,6]]")
        p.add_argument("--cols", type=int, help="column count for a matrix with no rows")
    p = leaf(g, "tensor", cmd_fgab, "dim of A (x) Z/l")
    p.add_argument("orders", type=int, nargs="*", help="cyclic orders, 0 for Z")
    p.add_argument("--prime", type=int, required=True)
    return parser


# -- rendering ----------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def render_table(record: dict) -> str:
    """Text view of a record's result; it shows nothing the JSON lacks."""
    lines = [f"# {record['command']}"]
    sections = [("result", record["result"])]
    if "certificates" in record:
        sections.append(("certificates", record["certificates"]))
    for title, payload in sections:
        items = payload.items() if isinstance(payload, dict) else [(title, payload)]
        for key, value in items:
            if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
                cols = sorted({k for x in value for k in x})
                rows = [[_cell(x.get(c)) for c in cols] for x in value]
                widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
                lines.append(f"{key}:")
                lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
                for r in rows:
                    lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
            else:
                lines.append(f"{key}: {_cell(value)}")
    return "\n".join(lines)


# -- entry point --------------------------------------------------------------

def _error_record(command: str, kind: str, exc: Exception) -> dict:
    err = {"type": kind, "message": str(exc)}
    if isinstance(exc, cobordism.SpaceSyntaxError):
        err["offset"] = exc.offset
    return jsonable({"schema_version": SCHEMA_VERSION, "command": command, "error": err})


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    command = "orbitkit"
    try:
        args = build_parser().parse_args(argv)
        command = f"{args.section} {args.cmd}"
        if args.sieve_limit is None:
            env = os.environ.get(SIEVE_ENV)
            try:
                args.sieve_limit = int(env) if env else numtheory.DEFAULT_SIEVE_LIMIT
            except ValueError:
                raise UsageError(f"{SIEVE_ENV}={env!r} is not an integer") from None
        if args.sieve_limit < 0 or (args.scan_limit is not None and args.scan_limit < 0):
            raise UsageError("limits must be nonnegative")
        produced = args.handler(args)
    except SearchBoundError as exc:
        print(serialize(_error_record(command, "search_bound", exc)), file=stderr)
        return 3
    except OrbitkitError as exc:
        print(serialize(_error_record(command, "invalid_input", exc)), file=stderr)
        return 2

    streaming = isinstance(produced, list)
    records = [make_record(command, *item) for item in (produced if streaming else [produced])]
    if args.format == "table":
        text = "\n\n".join(render_table(r) for r in records)
    elif streaming:
        text = "\n".join(serialize(r, compact=True) for r in records)
    else:
        text = serialize(records[0])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return 0


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
