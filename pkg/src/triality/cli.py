"""Command-line front-end: run the verification suites and emit objects.

Subcommands: ``verify`` (the check suite), ``emit`` (serialize a
constructed object), ``map`` (apply an outer operator to a basis),
``grade`` (the triality-graded basis), ``s3`` (the closure of the outer
operators), ``g2`` (the Lambda basis or the solved constraints), ``su3``
(check and emit the embedding blocks).

Exit codes: 0 all checks pass, 1 at least one check failed, 2 internal
construction error, 64 usage error.  Output is deterministic: identical
arguments produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import FAULT_H_SIGN, run_suite
from .clifford import (EUCLIDEAN, LORENTZIAN, cl7_basis, cl8_basis,
                       cl17_basis)
from .emit import matrix_to_json, matrix_to_latex, scalar_to_json
from .errors import TrialityError
from .outer import (apply_outer, graded_basis, outer_conj, outer_h,
                    outer_k, outer_op, outer_t, s3_closure)
from .representations import basis, spinor_bases, vector_basis
from .subalgebras import g2_basis, intersect_pair, restrict, su3_embedding

USAGE_EXIT = 64

EMIT_OBJECTS = ("gammas-cl7", "gammas-cl8", "gammas-cl17", "vector",
                "spinor-left", "spinor-right", "H", "K", "T", "g2-lambda",
                "g2-constraints", "su3-blocks", "graded")

# objects that accept a --signature flag (defaulting to 8,0)
_SIGNED = {"vector", "spinor-left", "spinor-right", "graded"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_signature(text):
    if text in ("8,0", "(8,0)"):
        return EUCLIDEAN
    if text in ("1,7", "(1,7)"):
        return LORENTZIAN
    return None


def _named_matrices(obj, signature):
    """The (name, matrix) list for an emit object, in deterministic order."""
    if obj == "gammas-cl7":
        return [(f"g_{k}", m) for k, m in
                enumerate(cl7_basis().gammas, start=1)]
    if obj == "gammas-cl8":
        return [(f"Gamma_{k}", m) for k, m in enumerate(cl8_basis().gammas)]
    if obj == "gammas-cl17":
        return [(f"Gamma_{k}", m) for k, m in enumerate(cl17_basis().gammas)]
    if obj == "H":
        return [("H", outer_h().core)]
    if obj == "K":
        return [("K", outer_k().core)]
    if obj == "T":
        return [("T", outer_t().core)]
    if obj == "vector":
        b = vector_basis(signature)
        return [(b.name_of(idx), m) for idx, m in b.items()]
    if obj == "spinor-left":
        b = spinor_bases(signature)[0]
        return [(b.name_of(idx), m) for idx, m in b.items()]
    if obj == "spinor-right":
        b = spinor_bases(signature)[1]
        return [(b.name_of(idx), m) for idx, m in b.items()]
    if obj == "g2-lambda":
        return [(f"Lambda_{k}", m) for k, m in
                enumerate(g2_basis().lambdas, start=1)]
    if obj == "su3-blocks":
        emb = su3_embedding(g2_basis())
        return [(f"U_Lambda_{k}_Udagger", m) for k, m in
                enumerate(emb.conjugated, start=1)]
    if obj == "graded":
        op = outer_h() if signature == EUCLIDEAN else outer_t()
        g = graded_basis(vector_basis(signature), op)
        out = [(f"invariant_{k}", m) for k, m in enumerate(g.g2_part, 1)]
        out += [(f"right_{k}", m) for k, m in enumerate(g.right_part, 1)]
        out += [(f"left_{k}", m) for k, m in enumerate(g.left_part, 1)]
        return out
    return None


def _emit_constraints(fmt):
    v = vector_basis(EUCLIDEAN)
    left = spinor_bases(EUCLIDEAN)[0]
    system = intersect_pair(restrict(v, 0), restrict(left, 0))
    records = [{"dependent": c.dependent,
                "terms": [{"coefficient": str(coeff), "variable": var}
                          for coeff, var in c.terms]}
               for c in system.constraints]
    if fmt == "json":
        return json.dumps({"object": "g2-constraints",
                           "rank": system.rank,
                           "unknowns": system.unknowns,
                           "dimension": system.subspace.dim,
                           "constraints": records},
                          indent=2, sort_keys=True) + "\n"
    if fmt == "latex":
        lines = [f"{c.dependent} &= {str(c).split(' = ')[1]} \\\\"
                 for c in system.constraints]
        return "\n".join(lines) + "\n"
    return "".join(str(c) + "\n" for c in system.constraints)


def _render(obj, named, fmt, signature):
    if fmt == "json":
        payload = {
            "object": obj,
            "signature": str(signature) if obj in _SIGNED else None,
            "items": [{"name": name, "matrix": matrix_to_json(m)}
                      for name, m in named],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "latex":
        return "".join(f"% {name}\n{matrix_to_latex(m)}\n"
                       for name, m in named)
    return "".join(f"{name} =\n{m}\n\n" for name, m in named)


def cmd_verify(args) -> int:
    fault = args.inject_fault
    try:
        report = run_suite(args.suite, fault=fault)
    except Exception as exc:  # construction failure, not a check failure
        print(f"internal construction error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json_text() if args.format == "json" else report.to_text()
    _write(args.out, text)
    return 1 if report.failed else 0


def cmd_emit(args) -> int:
    signature = _parse_signature(args.signature) if args.signature else None
    if args.signature and signature is None:
        print(f"unknown signature {args.signature!r}", file=sys.stderr)
        return USAGE_EXIT
    if args.object not in EMIT_OBJECTS:
        print(f"unknown object {args.object!r}; choose from "
              f"{', '.join(EMIT_OBJECTS)}", file=sys.stderr)
        return USAGE_EXIT
    if args.object in _SIGNED:
        signature = signature or EUCLIDEAN
    elif signature is not None:
        print(f"object {args.object!r} does not take a signature",
              file=sys.stderr)
        return USAGE_EXIT
    try:
        if args.object == "g2-constraints":
            text = _emit_constraints(args.format)
        else:
            named = _named_matrices(args.object, signature)
            text = _render(args.object, named, args.format, signature)
    except Exception as exc:
        print(f"internal construction error: {exc}", file=sys.stderr)
        return 2
    _write(args.out, text)
    return 0


def _write(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_OP_SIGNATURE = {"H": EUCLIDEAN, "K": EUCLIDEAN,
                 "T": LORENTZIAN, "conj": LORENTZIAN}


def cmd_map(args) -> int:
    op = outer_op(args.op)
    source = basis(args.source, _OP_SIGNATURE[args.op])
    mapped = apply_outer(op, source)
    items = []
    for k in range(7):
        from .outer import QUARTETS
        for t in range(4):
            idx = QUARTETS[t][k]
            coeffs = []
            for s in range(4):
                c = op.core[t, s]
                if c._nz:
                    coeffs.append({"generator": source.name_of(QUARTETS[s][k]),
                                   "coefficient": scalar_to_json(c),
                                   "conjugated": op.antilinear})
            items.append({"name": mapped.name_of(idx),
                          "coefficients": coeffs,
                          "matrix": matrix_to_json(mapped[idx])})
    items.sort(key=lambda x: x["name"])
    payload = {"op": args.op, "from": args.source, "to": mapped.kind,
               "signature": str(op.signature), "items": items}
    _write(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_grade(args) -> int:
    signature = _parse_signature(args.signature)
    if signature is None:
        print(f"unknown signature {args.signature!r}", file=sys.stderr)
        return USAGE_EXIT
    op = outer_h() if signature == EUCLIDEAN else outer_t()
    graded = graded_basis(vector_basis(signature), op)
    def part(name, gens, eigenvalue):
        return [{"name": f"{name}_{k}", "eigenvalue": eigenvalue,
                 "matrix": matrix_to_json(m)}
                for k, m in enumerate(gens, start=1)]
    payload = {
        "signature": str(signature),
        "operator": op.name,
        "provenance": graded.provenance,
        "invariant": part("invariant", graded.g2_part, "1"),
        "right": part("right", graded.right_part, "e^{+i2pi/3}"),
        "left": part("left", graded.left_part, "e^{-i2pi/3}"),
    }
    _write(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_s3(args) -> int:
    signature = _parse_signature(args.signature)
    if signature is None:
        print(f"unknown signature {args.signature!r}", file=sys.stderr)
        return USAGE_EXIT
    if signature == EUCLIDEAN:
        gens = [outer_h(), outer_k()]
        names = ["H", "K"]
    else:
        gens = [outer_t(), outer_conj()]
        names = ["T", "conj"]
    closure = s3_closure(gens)
    payload = {
        "signature": str(signature),
        "generators": names,
        "element_count": len(closure.elements),
        "element_orders": {str(k): v for k, v in
                           sorted(closure.order_counts.items())},
        "is_s3": closure.is_s3,
        "braid_relation_holds": closure.relation_holds,
        "elements": [{"antilinear": flag, "matrix": matrix_to_json(m)}
                     for m, flag in closure.elements],
    }
    _write(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_g2(args) -> int:
    if args.emit == "lambda":
        named = _named_matrices("g2-lambda", None)
        _write(args.out, _render("g2-lambda", named, args.format, None))
        return 0
    _write(args.out, _emit_constraints(args.format))
    return 0


def cmd_su3(args) -> int:
    try:
        emb = su3_embedding(g2_basis())
    except TrialityError as exc:
        print(f"su3 embedding check FAILED: {exc}", file=sys.stderr)
        return 1
    payload = {
        "check": "pass",
        "block_factor": scalar_to_json(emb.block_factor),
        "transform": matrix_to_json(emb.transform),
        "blocks": [{"name": f"U_Lambda_{k}_Udagger",
                    "matrix": matrix_to_json(m)}
                   for k, m in enumerate(emb.conjugated, start=1)],
    }
    _write(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="triality",
                     description="Exact verification and emission of the "
                                 "so(8)/spin(1,7) triality constructions.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--suite", choices=("euclidean", "lorentzian", "all"),
                        default="all")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", default=None, help="write to a file "
                        "instead of stdout")
    verify.add_argument("--inject-fault", choices=(FAULT_H_SIGN,),
                        default=None,
                        help="test-only negative control: corrupt one sign "
                             "in the triality core used by the cycling check")

    emit = sub.add_parser("emit", help="serialize a constructed object")
    emit.add_argument("--object", required=True,
                      help=f"one of: {', '.join(EMIT_OBJECTS)}")
    emit.add_argument("--signature", default=None,
                      help="8,0 (default) or 1,7 for basis objects")
    emit.add_argument("--format", choices=("text", "json", "latex"),
                      default="json")
    emit.add_argument("--out", default=None)

    map_cmd = sub.add_parser(
        "map", help="apply an outer operator to a basis (JSON)")
    map_cmd.add_argument("--op", choices=("H", "K", "T", "conj"),
                         required=True)
    map_cmd.add_argument("--from", dest="source", choices=("V", "L", "R"),
                         required=True)
    map_cmd.add_argument("--out", default=None)

    grade = sub.add_parser(
        "grade", help="the triality-graded basis for a signature (JSON)")
    grade.add_argument("--signature", choices=("8,0", "1,7"), required=True)
    grade.add_argument("--out", default=None)

    s3 = sub.add_parser(
        "s3", help="closure of the outer operators for a signature (JSON)")
    s3.add_argument("--signature", choices=("8,0", "1,7"), required=True)
    s3.add_argument("--out", default=None)

    g2 = sub.add_parser("g2", help="the intersection subalgebra")
    g2.add_argument("--emit", choices=("lambda", "constraints"),
                    default="lambda")
    g2.add_argument("--format", choices=("text", "json", "latex"),
                    default="json")
    g2.add_argument("--out", default=None)

    su3 = sub.add_parser("su3", help="verify and emit the su(3) embedding")
    su3.add_argument("--check", action="store_true",
                     help="exit 1 if the block decomposition fails")
    su3.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"verify": cmd_verify, "emit": cmd_emit, "map": cmd_map,
                "grade": cmd_grade, "s3": cmd_s3, "g2": cmd_g2,
                "su3": cmd_su3}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
