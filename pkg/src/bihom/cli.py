"""Command-line front end.

One verb per library operation family; every verb reads JSON documents (see
:mod:`bihom.documents` for the schemas), prints a human-readable report or,
with ``--json``, a machine-readable one, and exits with

* 0 when the requested check or construction succeeded,
* 1 on a semantic failure (an axiom report with violations, a singular
  twist, an invalid input object),
* 2 on unusable input (malformed JSON, schema violations, bad flags).

Constructive verbs (``subadjacent``, ``semidirect``, ``induced-rep``,
``twist-rep``, ``tensor-rep``, ``push-lie``, and ``o-operator`` /
``rota-baxter`` / ``nijenhuis`` with ``--output``) write the constructed
object as a JSON document to ``--output``, or print it when the flag is
omitted.  Output documents re-verify under the matching ``verify`` verb.

Set ``BIHOM_COLOR=0`` to disable styling.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import deformation as deform_mod
from .algebra import (
    AxiomError,
    AxiomReport,
    BiHomLieAlgebra,
    BiHomPreLieAlgebra,
    check_bihom_lie,
    check_prelie,
    subadjacent,
)
from .cohomology import cohomology_table
from .documents import (
    DocumentError,
    algebra_from_doc,
    algebra_to_doc,
    deformation_from_doc,
    deformation_to_doc,
    dump_json,
    load_json,
    nijenhuis_from_doc,
    operator_from_doc,
    rep_from_doc,
    rep_to_doc,
    twists_from_doc,
)
from .operators import (
    check_o_operator,
    check_rota_baxter,
    induced_prelie_from_o,
    rb_induced_prelie,
)
from .representation import (
    LieRep,
    PreLieRep,
    adjoint_rep,
    check_prelie_rep,
    induced_lie_rep,
    semidirect_lie,
    semidirect_prelie,
    tensor_rep,
    trivial_rep,
    twist_rep,
)

__all__ = ["main", "run"]


@dataclass
class CliResult:
    command: str
    status: str  # "pass" or "fail"
    lines: list[str] = field(default_factory=list)
    payload: dict = field(default_factory=dict)


def _color_enabled() -> bool:
    if os.environ.get("BIHOM_COLOR", "") == "0":
        return False
    return sys.stdout.isatty()


def _styled(text: str, code: str) -> str:
    if _color_enabled():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _verdict(passed: bool) -> str:
    return _styled("PASS", "32;1") if passed else _styled("FAIL", "31;1")


def _report_lines(report: AxiomReport) -> list[str]:
    lines = []
    for v in report.violations:
        at = ",".join(str(i + 1) for i in v.indices)
        suffix = f" at basis ({at})" if v.indices else ""
        lines.append(f"violation: {v.axiom}{suffix}")
    return lines


def _check_result(command: str, label: str, report: AxiomReport,
                  extra_payload: dict | None = None) -> CliResult:
    status = "pass" if report.passed else "fail"
    lines = [f"{label}: {_verdict(report.passed)}"] + _report_lines(report)
    payload = {"report": report.to_json()}
    if extra_payload:
        payload.update(extra_payload)
    return CliResult(command, status, lines, payload)


def _emit_document(result: CliResult, doc: dict, output: str | None) -> None:
    result.payload["document"] = doc
    if output:
        dump_json(output, doc)
        result.payload["output"] = output
        result.lines.append(f"wrote {output}")
    else:
        result.payload["output"] = None
        result.lines.append(json.dumps(doc, indent=2))


def _load_algebra_arg(path: str) -> BiHomPreLieAlgebra | BiHomLieAlgebra:
    p = Path(path)
    return algebra_from_doc(load_json(p), p.parent, where=str(p))


def _load_rep_arg(path: str) -> PreLieRep | LieRep:
    p = Path(path)
    return rep_from_doc(load_json(p), p.parent, where=str(p))


def _require_prelie(obj, what: str) -> BiHomPreLieAlgebra:
    if not isinstance(obj, BiHomPreLieAlgebra):
        raise DocumentError(f"{what} requires a product (pre-Lie) algebra document")
    return obj


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> CliResult:
    obj = _load_algebra_arg(args.algebra)
    if isinstance(obj, BiHomPreLieAlgebra):
        return _check_result("verify", "BiHom-pre-Lie", check_prelie(obj),
                             {"kind": "prelie"})
    return _check_result("verify", "BiHom-Lie", check_bihom_lie(obj),
                         {"kind": "lie"})


def _cmd_subadjacent(args) -> CliResult:
    a = _require_prelie(_load_algebra_arg(args.algebra), "subadjacent")
    report = check_prelie(a)
    if not report.passed:
        return _check_result("subadjacent", "input BiHom-pre-Lie", report)
    result = CliResult("subadjacent", "pass",
                       [f"sub-adjacent bracket of a dim-{a.dim} algebra"])
    _emit_document(result, algebra_to_doc(subadjacent(a)), args.output)
    return result


def _cmd_semidirect(args) -> CliResult:
    rep = _load_rep_arg(args.representation)
    if isinstance(rep, PreLieRep):
        out = semidirect_prelie(rep)
        label = "semidirect BiHom-pre-Lie product"
    else:
        out = semidirect_lie(rep)
        label = "semidirect BiHom-Lie bracket"
    result = CliResult("semidirect", "pass", [f"{label} on dim {out.dim}"])
    _emit_document(result, algebra_to_doc(out), args.output)
    return result


def _cmd_induced_rep(args) -> CliResult:
    rep = _load_rep_arg(args.representation)
    if not isinstance(rep, PreLieRep):
        raise DocumentError("induced-rep requires a pre-Lie representation "
                            "document (keys L and R)")
    report = check_prelie_rep(rep)
    if not report.passed:
        return _check_result("induced-rep", "input representation", report)
    out = induced_lie_rep(rep, args.variant)
    result = CliResult("induced-rep", "pass",
                       [f"induced BiHom-Lie representation ({args.variant})"])
    _emit_document(result, rep_to_doc(out), args.output)
    return result


def _cmd_twist_rep(args) -> CliResult:
    rep = _load_rep_arg(args.representation)
    if not isinstance(rep, PreLieRep):
        raise DocumentError("twist-rep requires a pre-Lie representation document")
    alpha, beta, phi, psi = twists_from_doc(load_json(args.twists),
                                            where=args.twists)
    out = twist_rep(rep, alpha, beta, phi, psi)
    result = CliResult("twist-rep", "pass", ["twisted representation"])
    _emit_document(result, rep_to_doc(out), args.output)
    return result


def _cmd_tensor_rep(args) -> CliResult:
    rv = _load_rep_arg(args.left)
    rw = _load_rep_arg(args.right)
    if not (isinstance(rv, PreLieRep) and isinstance(rw, PreLieRep)):
        raise DocumentError("tensor-rep requires two pre-Lie representation "
                            "documents")
    out = tensor_rep(rv, rw)
    result = CliResult("tensor-rep", "pass",
                       [f"tensor representation on a dim-{out.vdim} carrier"])
    _emit_document(result, rep_to_doc(out), args.output)
    return result


def _cmd_o_operator(args) -> CliResult:
    doc = load_json(args.operator)
    matrix, context = operator_from_doc(doc, Path(args.operator).parent,
                                        where=args.operator)
    if context is None and args.representation:
        context = _load_rep_arg(args.representation)
    if not isinstance(context, LieRep):
        raise DocumentError("o-operator needs a BiHom-Lie representation, "
                            "either embedded in the operator document or as "
                            "a second argument")
    report = check_o_operator(matrix, context)
    result = _check_result("o-operator", "O-operator", report)
    if report.passed and args.output is not None:
        out = induced_prelie_from_o(matrix, context)
        _emit_document(result, algebra_to_doc(out), args.output)
    return result


def _cmd_rota_baxter(args) -> CliResult:
    doc = load_json(args.operator)
    matrix, context = operator_from_doc(doc, Path(args.operator).parent,
                                        where=args.operator)
    if context is None and args.algebra:
        context = _load_algebra_arg(args.algebra)
    if not isinstance(context, BiHomLieAlgebra):
        raise DocumentError("rota-baxter needs a BiHom-Lie algebra, either "
                            "embedded in the operator document or as a "
                            "second argument")
    report = check_rota_baxter(matrix, context)
    result = _check_result("rota-baxter", "Rota-Baxter (weight 0)", report)
    if report.passed and args.output is not None:
        out = rb_induced_prelie(matrix, context)
        _emit_document(result, algebra_to_doc(out), args.output)
    return result


_DEGREES_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def _parse_degrees(spec: str, max_degree: int) -> list[int]:
    m = _DEGREES_RE.match(spec)
    if not m:
        raise DocumentError(f"cannot parse degree range {spec!r}; use 'a..b'")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise DocumentError(f"degree range {spec!r} is empty or starts below 1")
    degrees = [d for d in range(lo, hi + 1) if d <= max_degree]
    if not degrees:
        raise DocumentError(
            f"degree range {spec!r} lies beyond --max-degree {max_degree}")
    return degrees


def _cmd_cohomology(args) -> CliResult:
    a = _require_prelie(_load_algebra_arg(args.algebra), "cohomology")
    base = check_prelie(a)
    if not base.passed:
        return _check_result("cohomology", "input BiHom-pre-Lie", base)
    if args.rep == "adjoint":
        rep = adjoint_rep(a)
    elif args.rep == "trivial":
        rep = trivial_rep(a)
    else:
        rep = _load_rep_arg(args.rep)
        if not isinstance(rep, PreLieRep):
            raise DocumentError("cohomology coefficients must form a pre-Lie "
                                "representation")
        if rep.algebra != a:
            raise DocumentError("coefficient representation is over a "
                                "different algebra")
    rep_report = check_prelie_rep(rep)
    if not rep_report.passed:
        return _check_result("cohomology", "coefficient representation",
                             rep_report)
    degrees = _parse_degrees(args.degrees, args.max_degree)
    reports = cohomology_table(a, rep, degrees)
    lines = []
    dims = []
    for r in reports:
        lines.append(f"H^{r.degree} = {r.dimH} (Z={r.dimZ}, B={r.dimB})")
        dims.append({"degree": r.degree, "Z": r.dimZ, "B": r.dimB, "H": r.dimH})
    return CliResult("cohomology", "pass", lines, {"dimensions": dims})


def _cmd_deform_check(args) -> CliResult:
    obj = _load_algebra_arg(args.algebra)
    candidate = deformation_from_doc(load_json(args.deformation),
                                     where=args.deformation)
    if isinstance(obj, BiHomPreLieAlgebra):
        report = deform_mod.check_linear_deformation(obj, candidate)
        label = "linear deformation"
    else:
        report = deform_mod.check_lie_linear_deformation(obj, candidate)
        label = "BiHom-Lie linear deformation"
    return _check_result("deform-check", label, report)


def _cmd_nijenhuis(args) -> CliResult:
    obj = _load_algebra_arg(args.algebra)
    matrix = nijenhuis_from_doc(load_json(args.operator), where=args.operator)
    if isinstance(obj, BiHomLieAlgebra):
        report = deform_mod.check_nijenhuis_lie(obj, matrix)
        return _check_result("nijenhuis", "Nijenhuis (BiHom-Lie)", report)
    report = deform_mod.check_nijenhuis_prelie(obj, matrix)
    result = _check_result("nijenhuis", "Nijenhuis", report)
    if report.passed and args.output is not None:
        candidate, _ = deform_mod.nijenhuis_trivial_deformation(obj, matrix)
        _emit_document(result, deformation_to_doc(candidate), args.output)
    return result


def _cmd_equivalence(args) -> CliResult:
    a = _require_prelie(_load_algebra_arg(args.algebra), "equivalence")
    pi1 = deformation_from_doc(load_json(args.first), where=args.first)
    pi2 = deformation_from_doc(load_json(args.second), where=args.second)
    matrix = nijenhuis_from_doc(load_json(args.operator), where=args.operator)
    report = deform_mod.check_equivalence(a, pi1, pi2, matrix)
    return _check_result("equivalence", "deformation equivalence", report)


def _cmd_push_lie(args) -> CliResult:
    a = _require_prelie(_load_algebra_arg(args.algebra), "push-lie")
    candidate = deformation_from_doc(load_json(args.deformation),
                                     where=args.deformation)
    pushed = deform_mod.push_deformation_to_lie(a, candidate)
    result = CliResult("push-lie", "pass",
                       ["deformation pushed to the sub-adjacent algebra"])
    _emit_document(result, deformation_to_doc(pushed), args.output)
    return result


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihom",
        description="Exact checks and constructions for BiHom-pre-Lie and "
                    "BiHom-Lie algebras given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str, outputs: bool = False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable report")
        if outputs:
            p.add_argument("--output", metavar="PATH", default=None,
                           help="write the constructed document here")
        p.set_defaults(handler=handler)
        return p

    p = add("verify", _cmd_verify, "check every defining axiom of an algebra")
    p.add_argument("algebra")

    p = add("subadjacent", _cmd_subadjacent,
            "build the sub-adjacent BiHom-Lie algebra", outputs=True)
    p.add_argument("algebra")

    p = add("semidirect", _cmd_semidirect,
            "build the semidirect product defined by a representation",
            outputs=True)
    p.add_argument("representation")

    p = add("induced-rep", _cmd_induced_rep,
            "representation of the sub-adjacent algebra induced by a "
            "pre-Lie representation", outputs=True)
    p.add_argument("representation")
    p.add_argument("--variant", choices=["full", "l-only"], default="full")

    p = add("twist-rep", _cmd_twist_rep,
            "twist an untwisted representation by a twist bundle",
            outputs=True)
    p.add_argument("representation")
    p.add_argument("twists")

    p = add("tensor-rep", _cmd_tensor_rep,
            "tensor product of two representations", outputs=True)
    p.add_argument("left")
    p.add_argument("right")

    p = add("o-operator", _cmd_o_operator,
            "check an O-operator; --output writes the induced pre-Lie "
            "algebra", outputs=True)
    p.add_argument("operator")
    p.add_argument("representation", nargs="?", default=None)

    p = add("rota-baxter", _cmd_rota_baxter,
            "check a weight-0 Rota-Baxter operator; --output writes the "
            "induced pre-Lie algebra", outputs=True)
    p.add_argument("operator")
    p.add_argument("algebra", nargs="?", default=None)

    p = add("cohomology", _cmd_cohomology,
            "cocycle/coboundary/cohomology dimensions per degree")
    p.add_argument("algebra")
    p.add_argument("--rep", default="adjoint", metavar="adjoint|trivial|PATH",
                   help="coefficient representation (default: adjoint)")
    p.add_argument("--degrees", default="1..2", metavar="a..b",
                   help="degree range (default: 1..2)")
    p.add_argument("--max-degree", type=int, default=4,
                   help="hard cap on computed degrees (default: 4)")

    p = add("deform-check", _cmd_deform_check,
            "check that pi generates a linear deformation")
    p.add_argument("algebra")
    p.add_argument("deformation")

    p = add("nijenhuis", _cmd_nijenhuis,
            "check a Nijenhuis operator; --output writes its trivial "
            "deformation", outputs=True)
    p.add_argument("algebra")
    p.add_argument("operator")

    p = add("equivalence", _cmd_equivalence,
            "check that Id + tN intertwines two linear deformations")
    p.add_argument("algebra")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("operator")

    p = add("push-lie", _cmd_push_lie,
            "push a deformation to the sub-adjacent BiHom-Lie algebra",
            outputs=True)
    p.add_argument("algebra")
    p.add_argument("deformation")

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        result = args.handler(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomError as exc:
        result = CliResult(args.command, "fail", [f"{exc}"])
        if exc.report is not None:
            result.lines.extend(_report_lines(exc.report))
            result.payload["report"] = exc.report.to_json()
        result.payload["message"] = str(exc)
    except ValueError as exc:
        result = CliResult(args.command, "fail", [f"{exc}"],
                           {"message": str(exc)})
    if args.json:
        print(json.dumps({"command": result.command, "status": result.status,
                          **result.payload}, indent=2))
    else:
        for line in result.lines:
            print(line)
    return 0 if result.status == "pass" else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
