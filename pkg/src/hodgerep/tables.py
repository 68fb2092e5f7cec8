"""Golden tables recomputed from the engine.

The stored data files only say which evaluations and which (type, grading)
rows to look at; every value in the output is computed here from the root
data, so a table can be diffed against the stored transcription.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumerator import classify_gradings
from .errors import DomainError, UsageError
from .families import evaluate, integer, load_data, parameter_grid
from .hodgecore import AlgebraFactor, HodgeTuple, adjoint_grading, compact_dim, real_form_name
from .rootdata import (
    SimpleType,
    build_root_datum,
    diagram_automorphisms,
    eval_on_grading,
    parity_element_eval,
    permute,
)

TABLES = ("appendix", "hermitian", "contact")


@dataclass(frozen=True)
class ClaimRow:
    section: str
    type: SimpleType
    weight: tuple[int, ...]
    grading: tuple[int, ...]
    kind: str  # "eval" or "parity"
    relation: str  # "=", "mod2" or ">="
    claimed: Fraction
    computed: Fraction
    params: tuple[tuple[str, int], ...]

    @property
    def holds(self) -> bool:
        if self.relation == "=":
            return self.computed == self.claimed
        if self.relation == ">=":
            return self.computed >= self.claimed
        diff = self.computed - self.claimed
        return diff.denominator == 1 and diff.numerator % 2 == 0

    def label(self) -> str:
        weight = "+".join(
            (f"{k}w{i + 1}" if k != 1 else f"w{i + 1}") for i, k in enumerate(self.weight) if k
        )
        nodes = "+".join(f"A^{i + 1}" for i, x in enumerate(self.grading) if x)
        element = nodes if self.kind == "eval" else f"T[{nodes}]"
        rel = {"=": "=", ">=": ">=", "mod2": "= (mod 2)"}[self.relation]
        return f"{self.type}: ({weight})({element}) {rel} {self.claimed}"


def _type_of(spec: dict, env: dict) -> SimpleType | None:
    try:
        if "rank" in spec:
            return SimpleType(spec["type"], integer(spec["rank"], env))
        return SimpleType.parse(spec["type"])
    except DomainError:
        return None


def _vector(nodes, env, rank: int) -> tuple[int, ...]:
    chosen = {integer(x, env) for x in nodes}
    return tuple(int(i + 1 in chosen) for i in range(rank))


def appendix_rows(max_rank: int = 8) -> list[ClaimRow]:
    """Every stored evaluation claim, instantiated up to max_rank and recomputed."""
    rows = []
    for claim in load_data("appendix_values")["claims"]:
        for env in parameter_grid(claim.get("params", {}), max_rank):
            if "where" in claim and not evaluate(claim["where"], env):
                continue
            t = _type_of(claim, env)
            if t is None or t.rank > max_rank:
                continue
            datum = build_root_datum(t)
            weight = [0] * t.rank
            for node, coeff in claim["weight"].items():
                weight[integer(node, env) - 1] += integer(coeff, env)
            weight = tuple(weight)
            e = _vector(claim["grading"], env, t.rank)
            evaluator = eval_on_grading if claim["kind"] == "eval" else parity_element_eval
            rows.append(ClaimRow(
                section=claim["section"],
                type=t,
                weight=weight,
                grading=e,
                kind=claim["kind"],
                relation=claim["relation"],
                claimed=Fraction(evaluate(claim["value"], env)),
                computed=evaluator(datum, weight, e),
                params=tuple(sorted(env.items())),
            ))
    return rows


@dataclass(frozen=True)
class GradingRow:
    type: SimpleType
    e: tuple[int, ...]
    adjoint_grading: tuple[int, ...]
    compact_dim: int
    real_form: str | None

    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, x in enumerate(self.e) if x)


def grading_rows(kind: str, max_rank: int) -> list[GradingRow]:
    """Rows found by the exhaustive scan, with the adjoint data of each."""
    rows = []
    for t, e in classify_gradings(kind, max_rank):
        f = AlgebraFactor(t, e, tuple(int(i == 0) for i in range(t.rank)))
        rows.append(GradingRow(t, e, adjoint_grading(f), compact_dim(HodgeTuple((f,))), real_form_name(f)))
    return rows


def stored_gradings(kind: str, max_rank: int) -> dict[tuple[SimpleType, tuple[int, ...]], frozenset[str]]:
    """Transcribed table rows closed under diagram automorphisms, with their real forms.

    A listed row keeps its own name; an unlisted image collects the names of
    every row it comes from (D4 triality makes so*(8) and so(2,6) meet).
    """
    if kind not in ("hermitian", "contact"):
        raise UsageError(f"kind must be 'hermitian' or 'contact', got {kind!r}")
    listed = {}
    for spec in load_data("gradings")[kind]:
        for env in parameter_grid(spec.get("params", {}), max_rank):
            t = _type_of(spec, env)
            if t is not None and t.rank <= max_rank:
                listed[(t, _vector(spec["e"], env, t.rank))] = _format_name(spec["real_form"], env)
    images: dict = {}
    for (t, e), name in listed.items():
        for p in diagram_automorphisms(t):
            images.setdefault((t, permute(e, p)), set()).add(name)
    return {key: frozenset({listed[key]} if key in listed else names) for key, names in images.items()}


def _format_name(template: str, env: dict) -> str:
    out, rest = [], template
    while "{" in rest:
        head, _, tail = rest.partition("{")
        expr, _, rest = tail.partition("}")
        out.append(head)
        out.append(str(integer(expr, env)))
    out.append(rest)
    return "".join(out)
