"""Command-line front end.

Exit codes: 0 success or provable, 1 not provable or not constructively
true, 2 usage or parse error, 3 resource limit or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from provability.audit import BudgetExceeded, audit
from provability.classify import classify, independence_probe, rosser_status
from provability.fixedpoint import NoConvergence, NotModalized, fixed_point, liar_result
from provability.formula import Formula, Negation, is_letterless
from provability.prover import DEFAULT_BUDGET, ResourceLimit, decide
from provability.syntax import ParseError, parse
from provability.table import TableMismatch, build_table, render_table
from provability.trace import compute_trace, normal_form

MAX_PROBE_N = 64

OK, NEGATIVE, USAGE, LIMIT = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    human_text: str
    machine_payload: Optional[dict] = None


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _letterless(text: str, command: str) -> Formula:
    f = parse(text)
    if not is_letterless(f):
        raise _UsageError(
            f"{command} needs a letterless sentence; {text!r} contains atoms. "
            "Use `prove` to decide formulas with atoms."
        )
    return f


def _outcome_payload(outcome) -> dict:
    if outcome.provable:
        return {"verdict": "Provable"}
    return {"verdict": "Refuted", "model": outcome.model.to_dict()}


def cmd_prove(text: str, budget: int) -> CommandResult:
    f = parse(text)
    outcome = decide(f, budget)
    payload = {"formula": str(f), **_outcome_payload(outcome)}
    if outcome.provable:
        return CommandResult(OK, "Provable", payload)
    return CommandResult(NEGATIVE, "Not provable; countermodel:\n" + outcome.model.to_text(), payload)


def _describe(f: Formula) -> tuple[str, dict, bool]:
    c = classify(f)
    rs = rosser_status(f)
    if c.constructively_true:
        falsity = "constructively true"
    else:
        falsity = f"{c.smallest_n}-constructively false at the smallest"

    def opt(v):
        return "none" if v is None else str(v)

    lines = [
        f"formula: {f}",
        str(c.trace),
        f"normal form: {c.normal_form}",
        f"classically {'true' if c.classically_true else 'false'}",
        falsity,
        f"category: {c.category}",
        f"rosser: n_rosser={opt(rs.n_rosser)} weak_rosser_n={opt(rs.weak_rosser_n)}",
    ]
    payload = {"formula": str(f), "classification": c.to_dict(), "rosser_status": rs.to_dict()}
    return "\n".join(lines), payload, c.constructively_true


def cmd_classify(text: str) -> CommandResult:
    f = _letterless(text, "classify")
    human, payload, ctrue = _describe(f)
    return CommandResult(OK if ctrue else NEGATIVE, human, payload)


def cmd_nf(text: str) -> CommandResult:
    f = _letterless(text, "nf")
    nf = normal_form(f)
    return CommandResult(OK, str(nf), {"formula": str(f), "normal_form": str(nf)})


def cmd_trace(text: str) -> CommandResult:
    f = _letterless(text, "trace")
    tr = compute_trace(f)
    return CommandResult(OK, str(tr), {"formula": str(f), "trace": tr.to_dict()})


def _fixed_point_report(result) -> CommandResult:
    fp = result.fixed_point
    status = "OK" if result.certificate_checked else "FAILED"
    how = (
        f"after {result.iterations} iterations"
        if result.iterations is not None
        else "by direct construction"
    )
    lines = [f"fixed point: {fp}", f"found {how}; certificate {status}"]
    payload = {"fixed_point": result.to_dict()}
    if is_letterless(fp):
        human, cl, _ = _describe(fp)
        neg_human, neg_cl, _ = _describe(Negation(fp))
        lines += ["", human, "", "negation:", neg_human]
        payload["classification"] = cl["classification"]
        payload["rosser_status"] = cl["rosser_status"]
        payload["negation_classification"] = neg_cl["classification"]
    return CommandResult(OK, "\n".join(lines), payload)


def cmd_liar(n: int, max_iter: Optional[int], budget: int) -> CommandResult:
    if n < 1:
        raise _UsageError("liar index must be at least 1")
    return _fixed_point_report(liar_result(n, max_iter, budget))


def cmd_fixedpoint(template: str, atom: str, max_iter: Optional[int], budget: int) -> CommandResult:
    return _fixed_point_report(fixed_point(parse(template), atom, max_iter, budget))


def cmd_table(max_n: int, budget: int) -> CommandResult:
    try:
        entries = build_table(max_n, budget)
    except ValueError as e:
        raise _UsageError(str(e))
    return CommandResult(OK, render_table(entries), {"entries": [e.to_dict() for e in entries]})


def cmd_audit(max_depth: int, budget: int) -> CommandResult:
    report = audit(max_depth, budget)
    return CommandResult(OK, report.render(), report.to_dict())


def cmd_probe(text: str, N: int, budget: int) -> CommandResult:
    if N > MAX_PROBE_N:
        raise BudgetExceeded(f"probe length is capped at {MAX_PROBE_N}, got {N}")
    if N < 1:
        raise _UsageError("probe length must be at least 1")
    f = parse(text)
    res = independence_probe(f, N, budget)
    lines = [f"formula: {f}"]
    for e in res.entries:
        for label, outcome in (("f", e.sentence), ("~f", e.negation)):
            verdict = "Provable" if outcome.provable else "Refuted"
            lines.append(f"n={e.n} {label}: []{label} -> []^{e.n} bot  {verdict}")
            if not outcome.provable:
                lines += ["    " + row for row in outcome.model.to_text().splitlines()]
    if res.extreme_witness:
        lines.append("schema witness for extreme independence")
    elif res.strong_witness:
        lines.append("schema witness for strong independence")
    else:
        first = next(e.n for e in res.entries if e.sentence.provable)
        lines.append(f"not a witness: {first}-constructively false")
    return CommandResult(OK, "\n".join(lines), res.to_dict())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the machine-readable payload")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"prover node budget (default {DEFAULT_BUDGET})")
    common.add_argument("--max-iter", type=int, default=argparse.SUPPRESS,
                        help="fixed-point iteration bound (default: modal depth + 2)")

    parser = _Parser(prog="provability", parents=[common],
                     description="GL decision procedure and constant-sentence classifier")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, *args):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for arg, kwargs in args:
            p.add_argument(arg, **kwargs)
        return p

    add("prove", "decide GL-provability", ("formula", {}))
    add("classify", "classify a letterless sentence", ("formula", {}))
    add("nf", "normal form of a letterless sentence", ("formula", {}))
    add("trace", "rank trace of a letterless sentence", ("formula", {}))
    add("liar", "n-constructive liar fixed point", ("n", {"type": int}))
    add("fixedpoint", "GL fixed point of a template", ("template", {}), ("atom", {}))
    add("table", "summary table of constant sentences", ("max_n", {"type": int}))
    add("audit", "exhaustive check of the classification claims", ("max_depth", {"type": int}))
    add("probe", "independence probe", ("formula", {}), ("N", {"type": int}))
    return parser


def run(argv: Sequence[str]) -> tuple[CommandResult, bool]:
    """Execute a command; returns the result and whether JSON output was requested."""
    want_json = False
    try:
        args = build_parser().parse_args(list(argv))
        want_json = getattr(args, "json", False)
        budget = getattr(args, "budget", DEFAULT_BUDGET)
        max_iter = getattr(args, "max_iter", None)
        cmd = args.command
        if cmd == "prove":
            result = cmd_prove(args.formula, budget)
        elif cmd == "classify":
            result = cmd_classify(args.formula)
        elif cmd == "nf":
            result = cmd_nf(args.formula)
        elif cmd == "trace":
            result = cmd_trace(args.formula)
        elif cmd == "liar":
            result = cmd_liar(args.n, max_iter, budget)
        elif cmd == "fixedpoint":
            result = cmd_fixedpoint(args.template, args.atom, max_iter, budget)
        elif cmd == "table":
            result = cmd_table(args.max_n, budget)
        elif cmd == "audit":
            result = cmd_audit(args.max_depth, budget)
        else:
            result = cmd_probe(args.formula, args.N, budget)
    except _UsageError as e:
        result = CommandResult(USAGE, str(e), {"error": "usage", "message": str(e)})
    except ParseError as e:
        result = CommandResult(USAGE, f"parse error: {e}",
                               {"error": "parse", "message": str(e), "offset": e.offset,
                                "expected": sorted(e.expected)})
    except NotModalized as e:
        result = CommandResult(USAGE, f"not modalized: {e}", {"error": "not_modalized", "message": str(e)})
    except (ResourceLimit, BudgetExceeded, NoConvergence, TableMismatch) as e:
        kind = type(e).__name__
        result = CommandResult(LIMIT, f"{kind}: {e}", {"error": kind, "message": str(e)})
    return result, want_json


def main(argv: Optional[Sequence[str]] = None) -> int:
    result, want_json = run(sys.argv[1:] if argv is None else argv)
    if want_json and result.machine_payload is not None:
        print(json.dumps(result.machine_payload, indent=2, sort_keys=True))
    else:
        stream = sys.stdout if result.exit_code in (OK, NEGATIVE) else sys.stderr
        print(result.human_text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
