"""Command-line front end.

    hodgerep rep-info -a C3 -e 0,0,1 -w 0,0,1 -c 0
    hodgerep rep-info -a "A1+B2" -e "(1)+(1,0)" -w "(1)+(0,1)"
    hodgerep classify --weight 2 --pattern "2,*,2" --horizontal --max-rank 6
    hodgerep adjoint -a E6 -e 0,1,0,0,0,0
    hodgerep tables appendix --max-rank 8

Exit status: 0 success, 2 usage error, 3 domain error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import config
from .enumerator import FLAGS, SearchConstraints, classify_tuple, enumerate_tuples, parse_pattern
from .errors import HodgeRepError, UsageError
from .families import family_report
from .hodgecore import AlgebraFactor, HodgeTuple, adjoint_grading, compact_dim, real_form_name, total_character
from .rootdata import SimpleType, highest_root_eval
from .serialize import (
    OutputRecord,
    classified_to_dict,
    fraction_text,
    parse_fraction,
)
from .tables import TABLES, appendix_rows, grading_rows


# Input grammar ------------------------------------------------------------------


def split_factors(text: str) -> list[str]:
    """Split "A1+B2" or "(1)+(1,0)" into per-factor chunks."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError(f"unbalanced parentheses in {text!r}")
        if ch == "+" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth:
        raise UsageError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return [p.strip() for p in parts]


def parse_vector(text: str, what: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    out = []
    for token in body.split(","):
        token = token.strip()
        if not re.fullmatch(r"-?\d+", token):
            raise UsageError(f"bad {what} entry {token!r} in {text!r}; expected comma-separated integers")
        out.append(int(token))
    return tuple(out)


def parse_tuple(algebra: str, grading: str, weight: str, c: str) -> HodgeTuple:
    types = [SimpleType.parse(a.strip("() ")) for a in split_factors(algebra)]
    gradings = [parse_vector(g, "grading") for g in split_factors(grading)]
    weights = [parse_vector(w, "weight") for w in split_factors(weight)]
    if not len(types) == len(gradings) == len(weights):
        raise UsageError(
            f"got {len(types)} algebra(s), {len(gradings)} grading(s) and {len(weights)} weight(s); "
            "give one of each per factor, joined with '+'"
        )
    factors = tuple(AlgebraFactor(t, e, mu) for t, e, mu in zip(types, gradings, weights))
    return HodgeTuple(factors, parse_fraction(c))


# Commands -------------------------------------------------------------------------


def cmd_rep_info(args) -> OutputRecord:
    t = parse_tuple(args.algebra, args.grading, args.weight, args.c)
    x = classify_tuple(t)
    record = classified_to_dict(x)
    record["character"] = {fraction_text(k): v for k, v in total_character(x.tuple).eigenvalues.items()}
    inputs = {"algebra": args.algebra, "grading": args.grading, "weight": args.weight, "c": args.c}
    return OutputRecord("rep-info", inputs, [record], list(x.notes))


def cmd_classify(args) -> OutputRecord:
    caps = config.active_caps()
    pattern = parse_pattern(args.pattern) if args.pattern else (None,) * (args.weight + 1)
    require = frozenset(flag for flag in FLAGS if getattr(args, flag.replace("-", "_")))
    max_dim = args.max_dim
    if max_dim is None and None in pattern:
        max_dim = caps.max_dim_v
    constraints = SearchConstraints(
        weight_n=args.weight,
        hodge_pattern=pattern,
        require=require,
        max_rank=args.max_rank or caps.max_rank,
        max_factors=args.max_factors or caps.max_factors,
        max_dim_v=max_dim,
        min_factors=args.min_factors,
        require_nonzero_middle=args.require_nonzero_middle,
    )
    found = enumerate_tuples(constraints)
    inputs = {
        "weight": constraints.weight_n,
        "pattern": args.pattern or ",".join("*" * (args.weight + 1)),
        "require": sorted(require),
        "max_rank": constraints.max_rank,
        "max_factors": constraints.max_factors,
        "min_factors": constraints.min_factors,
        "max_dim": constraints.max_dim_v,
        "require_nonzero_middle": constraints.require_nonzero_middle,
    }
    notes = family_report(
        [x.tuple for x in found], max_rank=constraints.max_rank, max_factors=constraints.max_factors
    )
    return OutputRecord("classify", inputs, [classified_to_dict(x) for x in found], notes)


def cmd_adjoint(args) -> OutputRecord:
    types = [SimpleType.parse(a.strip("() ")) for a in split_factors(args.algebra)]
    gradings = [parse_vector(g, "grading") for g in split_factors(args.grading)]
    if len(types) != len(gradings):
        raise UsageError(f"got {len(types)} algebra(s) but {len(gradings)} grading(s)")
    rows = []
    for t, e in zip(types, gradings):
        # any nonzero weight will do: only (type, e) enters the adjoint data
        f = AlgebraFactor(t, e, (1,) + (0,) * (t.rank - 1))
        grading = adjoint_grading(f)
        rows.append({
            "type": str(t),
            "e": list(f.e),
            "adjoint_grading": list(grading),
            "depth": highest_root_eval(f.datum, f.e),
            "compact_dim": compact_dim(HodgeTuple((f,))),
            "real_form": real_form_name(f),
        })
    return OutputRecord("adjoint", {"algebra": args.algebra, "grading": args.grading}, rows, [])


def cmd_tables(args) -> OutputRecord:
    max_rank = args.max_rank or (7 if args.which == "hermitian" else 8)
    inputs = {"which": args.which, "max_rank": max_rank}
    if args.which == "appendix":
        rows = []
        for r in appendix_rows(max_rank):
            rows.append({
                "section": r.section,
                "type": str(r.type),
                "weight": list(r.weight),
                "grading": list(r.grading),
                "kind": r.kind,
                "relation": r.relation,
                "claimed": fraction_text(r.claimed),
                "computed": fraction_text(r.computed),
                "holds": r.holds,
                "label": r.label(),
            })
        failing = sum(not row["holds"] for row in rows)
        notes = [f"{len(rows)} evaluations, {failing} where the stored claim does not hold"]
        return OutputRecord("tables", inputs, rows, notes)
    rows = []
    for r in grading_rows(args.which, max_rank):
        rows.append({
            "type": str(r.type),
            "e": list(r.e),
            "adjoint_grading": list(r.adjoint_grading),
            "compact_dim": r.compact_dim,
            "real_form": r.real_form,
        })
    return OutputRecord("tables", inputs, rows, [f"{len(rows)} gradings"])


# Text rendering ---------------------------------------------------------------------


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_text(record: OutputRecord) -> str:
    lines = []
    if record.command in ("rep-info", "classify"):
        if record.command == "classify":
            lines.append(f"{len(record.results)} tuple(s)")
        for item in record.results:
            d = item["descriptor"]
            h = ",".join(map(str, d["hodge_numbers"]))
            if record.command == "classify":
                lines.append(f"{item['text']:<60} h=({h}) {d['reality']}")
                continue
            lines.append(f"tuple:            {item['text']}")
            char = "  ".join(f"{k}:{v}" for k, v in item["character"].items())
            lines.append(f"U eigenvalues:    {char}")
            lines.append(f"level:            {d['level']}")
            lines.append(f"hodge numbers:    ({h})")
            lines.append(f"dim V:            {d['dim_v']}")
            lines.append(f"reality:          {d['reality']}")
            grading = "; ".join(",".join(map(str, g)) for g in d["adjoint_grading"])
            lines.append(f"adjoint grading:  {grading}")
            lines.append(f"depth:            {d['depth']}")
            lines.append(f"horizontal:       {_yes(d['horizontal'])}")
            lines.append(f"contact:          {_yes(d['contact'])}")
            lines.append(f"period domain:    {_yes(d['period_domain'])}")
            lines.append(f"CY type:          {_yes(d['cy_type'])}")
            lines.append(f"compact dim:      {d['compact_dim']}")
            lines.append(f"real form:        {d['real_form'] or '-'}")
    elif record.command == "adjoint":
        for row in record.results:
            grading = ",".join(map(str, row["adjoint_grading"]))
            e = ",".join(map(str, row["e"]))
            lines.append(
                f"{row['type']} e={e}: adjoint grading ({grading}), depth {row['depth']}, "
                f"compact dim {row['compact_dim']}, real form {row['real_form'] or '-'}"
            )
    elif record.inputs.get("which") == "appendix":
        for row in record.results:
            mark = "ok" if row["holds"] else "FAILS"
            lines.append(f"{row['label']:<48} computed {row['computed']:>6}  {mark}")
    else:
        for row in record.results:
            support = "+".join(f"A^{i + 1}" for i, x in enumerate(row["e"]) if x)
            grading = ",".join(map(str, row["adjoint_grading"]))
            lines.append(f"{row['type']:<4} {support:<12} ({grading})  {row['real_form'] or '-'}")
    lines.extend(f"note: {n}" for n in record.notes)
    return "\n".join(lines) + "\n"


# Argument parsing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON record")
    common.add_argument("--config", metavar="PATH", default=argparse.SUPPRESS, help="key=value file of caps")

    parser = argparse.ArgumentParser(prog="hodgerep", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("rep-info", parents=[common], help="describe one tuple")
    rep.add_argument("-a", "--algebra", required=True, help="e.g. C3, or A1+B2")
    rep.add_argument("-e", "--grading", required=True, help="0/1 vector per factor, e.g. 0,0,1")
    rep.add_argument("-w", "--weight", required=True, help="highest weight per factor, e.g. 0,0,1")
    rep.add_argument("-c", default="0", help="center scalar as p or p/q (default 0)")
    rep.set_defaults(handler=cmd_rep_info)

    cls = sub.add_parser("classify", parents=[common], help="enumerate tuples with given Hodge numbers")
    cls.add_argument("--weight", type=int, required=True, help="weight n of the Hodge structure")
    cls.add_argument("--pattern", help="palindromic Hodge numbers with * wildcards, e.g. '2,*,2'")
    for flag in FLAGS:
        cls.add_argument(f"--{flag}", action="store_true", help=f"require the {flag} property")
    cls.add_argument("--max-rank", type=int)
    cls.add_argument("--max-factors", type=int)
    cls.add_argument("--min-factors", type=int, default=1)
    cls.add_argument("--max-dim", type=int, help="bound on dim V (needed with wildcards)")
    cls.add_argument("--require-nonzero-middle", action="store_true",
                     help="reject tuples with a zero interior Hodge number")
    cls.set_defaults(handler=cmd_classify)

    adj = sub.add_parser("adjoint", parents=[common], help="adjoint grading of (algebra, grading)")
    adj.add_argument("-a", "--algebra", required=True)
    adj.add_argument("-e", "--grading", required=True)
    adj.set_defaults(handler=cmd_adjoint)

    tab = sub.add_parser("tables", parents=[common], help="recompute a golden table")
    tab.add_argument("which", choices=TABLES)
    tab.add_argument("--max-rank", type=int)
    tab.set_defaults(handler=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = config.active_caps()
    try:
        config.set_active_caps(config.load_caps(getattr(args, "config", None)))
        record = args.handler(args)
    except HodgeRepError as exc:
        print(f"hodgerep: error: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        config.set_active_caps(previous)
    if getattr(args, "json", False):
        sys.stdout.write(record.to_json())
    else:
        sys.stdout.write(render_text(record))
    return 0


if __name__ == "__main__":
    sys.exit(main())
