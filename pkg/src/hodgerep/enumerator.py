"""Bounded exhaustive search for Hodge representations with given Hodge numbers.

For a fixed level n every factor contributes s = (mu + mu*)(E) eigenvalue
steps, and these add up to at most n.  Since each fundamental weight pairs
positively with every nonzero grading element, only finitely many weights
qualify per (type, grading).  The center scalar is pinned by putting the top
eigenvalue of V at n/2; the opposite normalization is the dual tuple, which
canonicalization identifies with this one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .config import active_caps
from .errors import DomainError, UsageError
from .hodgecore import (
    AlgebraFactor,
    HodgeDescriptor,
    HodgeTuple,
    describe,
)
from .repdata import levi_dimension, weyl_dimension
from .rootdata import (
    SimpleType,
    admissible_types,
    build_root_datum,
    diagram_automorphisms,
    dual_weight,
    eval_on_grading,
    highest_root_eval,
    permute,
)

FLAGS = ("horizontal", "non-horizontal", "contact", "period-domain", "cy")

Pattern = tuple  # entries are int or None (wildcard)


def parse_pattern(text: str) -> Pattern:
    entries = []
    for token in text.replace(" ", "").strip("()").split(","):
        if token == "*":
            entries.append(None)
        else:
            try:
                value = int(token)
            except ValueError:
                raise UsageError(f"bad Hodge pattern entry {token!r} in {text!r}") from None
            if value < 0:
                raise UsageError(f"Hodge pattern entries must be non-negative, got {value}")
            entries.append(value)
    return tuple(entries)


def format_pattern(pattern: Pattern) -> str:
    return ",".join("*" if x is None else str(x) for x in pattern)


@dataclass(frozen=True)
class SearchConstraints:
    weight_n: int
    hodge_pattern: Pattern
    require: frozenset[str] = frozenset()
    max_rank: int = 8
    max_factors: int = 3
    max_dim_v: int | None = None
    min_factors: int = 1
    require_nonzero_middle: bool = False

    def __post_init__(self):
        object.__setattr__(self, "hodge_pattern", tuple(self.hodge_pattern))
        object.__setattr__(self, "require", frozenset(self.require))
        if self.weight_n < 1:
            raise UsageError(f"weight must be positive, got {self.weight_n}")
        if len(self.hodge_pattern) != self.weight_n + 1:
            raise UsageError(
                f"pattern {format_pattern(self.hodge_pattern)} has {len(self.hodge_pattern)} entries, "
                f"weight {self.weight_n} needs {self.weight_n + 1}"
            )
        if self.hodge_pattern != self.hodge_pattern[::-1]:
            raise UsageError(f"pattern {format_pattern(self.hodge_pattern)} is not palindromic")
        unknown = self.require - set(FLAGS)
        if unknown:
            raise UsageError(f"unknown flags {sorted(unknown)}; expected some of {list(FLAGS)}")
        if {"horizontal", "non-horizontal"} <= self.require:
            raise UsageError("horizontal and non-horizontal are mutually exclusive")
        for name in ("max_rank", "max_factors", "min_factors"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be positive")
        if self.max_dim_v is not None and self.max_dim_v < 1:
            raise UsageError("max_dim_v must be positive")
        if self.max_dim_v is None and not self.fully_fixed:
            raise UsageError("search is unbounded: give max_dim_v or a pattern without wildcards")

    @property
    def fully_fixed(self) -> bool:
        return None not in self.hodge_pattern

    @property
    def dim_bound(self) -> int:
        bounds = [b for b in (self.max_dim_v, sum(self.hodge_pattern) if self.fully_fixed else None) if b]
        return min(bounds)

    @property
    def top_bound(self) -> int | None:
        return self.hodge_pattern[0]


@dataclass(frozen=True)
class ClassifiedTuple:
    tuple: HodgeTuple
    descriptor: HodgeDescriptor
    notes: tuple[str, ...] = field(default=())


# Canonical order -----------------------------------------------------------


def factor_key(f: AlgebraFactor) -> tuple:
    support = tuple(i + 1 for i, x in enumerate(f.e) if x)
    return (f.type.family, f.type.rank, support, f.mu)


def _least_image(f: AlgebraFactor) -> AlgebraFactor:
    return min((f.permuted(p) for p in diagram_automorphisms(f.type)), key=factor_key)


def tuple_key(t: HodgeTuple) -> tuple:
    return (tuple(factor_key(f) for f in t.factors), t.c)


def canonicalize(t: HodgeTuple) -> HodgeTuple:
    """Least representative under diagram automorphisms and (mu, c) -> (mu*, -c)."""
    best = None
    for choice in (t, t.dual()):
        factors = sorted((_least_image(f) for f in choice.factors), key=factor_key)
        cand = HodgeTuple(tuple(factors), choice.c)
        if best is None or tuple_key(cand) < tuple_key(best):
            best = cand
    return best


# Per-factor candidates -------------------------------------------------------


@dataclass(frozen=True)
class _Candidate:
    factor: AlgebraFactor
    steps: Fraction  # (mu + mu*)(E)
    dim: int
    top: int
    depth: int


def _gradings(t: SimpleType):
    """Nonzero gradings, one per orbit of diagram automorphisms."""
    r = t.rank
    autos = diagram_automorphisms(t)
    for e in product((0, 1), repeat=r):
        if any(e) and all(permute(e, p) >= e for p in autos):
            yield e


@lru_cache(maxsize=None)
def _factor_candidates(t: SimpleType, e: tuple, n: int, dim_cap: int, top_cap: int | None) -> tuple[_Candidate, ...]:
    datum = build_root_datum(t)
    r = t.rank
    unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    cost = [
        eval_on_grading(datum, u, e) + eval_on_grading(datum, dual_weight(datum, u), e) for u in unit
    ]
    depth = highest_root_eval(datum, e)
    out = []

    def feasible(mu):
        if weyl_dimension(datum, mu) > dim_cap:
            return False
        return top_cap is None or levi_dimension(datum, mu, e) <= top_cap

    def extend(mu, i, spent):
        if i == r:
            if any(mu):
                out.append(_Candidate(
                    AlgebraFactor(t, e, mu), spent, weyl_dimension(datum, mu), levi_dimension(datum, mu, e), depth
                ))
            return
        k = 0
        while True:
            cand = mu[:i] + (k,) + mu[i + 1:]
            total = spent + k * cost[i]
            # dimension and top multiplicity only grow with each coordinate
            if total > n or (k and not feasible(cand)):
                break
            extend(cand, i + 1, total)
            k += 1

    extend((0,) * r, 0, Fraction(0))
    return tuple(out)


def _candidates(c: SearchConstraints) -> list[_Candidate]:
    out = []
    for t in admissible_types(c.max_rank):
        for e in _gradings(t):
            depth = highest_root_eval(build_root_datum(t), e)
            if "horizontal" in c.require and depth != 1:
                continue
            if "contact" in c.require and depth != 2:
                continue
            out.extend(_factor_candidates(t, e, c.weight_n, c.dim_bound, c.top_bound))
    return out


# Search ------------------------------------------------------------------------


def _matches(c: SearchConstraints, d: HodgeDescriptor) -> bool:
    if d.level != c.weight_n or d.dim_v > c.dim_bound:
        return False
    if any(want is not None and want != got for want, got in zip(c.hodge_pattern, d.hodge_numbers)):
        return False
    if c.require_nonzero_middle and not all(d.hodge_numbers[1:-1]):
        return False
    checks = {
        "horizontal": d.horizontal,
        "non-horizontal": not d.horizontal,
        "contact": d.contact,
        "period-domain": d.period_domain,
        "cy": d.cy_type,
    }
    return all(checks[flag] for flag in c.require)


def _alias_notes(t: HodgeTuple) -> list[str]:
    notes = []
    kinds = {f.type for f in t.factors}
    if SimpleType("B", 2) in kinds:
        notes.append("so(5) = sp(4): B2 nodes 1,2 are sp(4) nodes 2,1")
    if SimpleType("A", 3) in kinds:
        notes.append("sl(4) = so(6): A3 weight w2 is the so(6) vector representation")
    if any(f.type == SimpleType("A", 1) and f.mu == (2,) for f in t.factors):
        notes.append("sl(2) = so(3): weight 2w1 is the so(3) vector representation")
    if sum(f.type == SimpleType("A", 1) for f in t.factors) >= 2:
        notes.append("sl(2) + sl(2) = so(4): w1 (x) w1 is the so(4) vector representation")
    return notes


def classify_tuple(t: HodgeTuple) -> ClassifiedTuple:
    t = canonicalize(t)
    d = describe(t)
    notes = list(d.notes) + _alias_notes(t)
    if d.real_form:
        notes.append(f"real form {d.real_form}")
    return ClassifiedTuple(t, d, tuple(notes))


def enumerate_tuples(c: SearchConstraints) -> list[ClassifiedTuple]:
    caps = active_caps()
    if c.max_rank > caps.max_rank:
        raise UsageError(f"max_rank {c.max_rank} exceeds the configured cap {caps.max_rank}")
    if c.max_factors > caps.max_factors:
        raise UsageError(f"max_factors {c.max_factors} exceeds the configured cap {caps.max_factors}")
    n = c.weight_n
    half = Fraction(n, 2)
    cands = _candidates(c)
    found: dict[tuple, ClassifiedTuple] = {}
    for size in range(c.min_factors, c.max_factors + 1):
        for combo in combinations_with_replacement(range(len(cands)), size):
            parts = [cands[i] for i in combo]
            if sum(p.steps for p in parts) > n:
                continue
            dim = top = 1
            for p in parts:
                dim *= p.dim
                top *= p.top
            if dim > c.dim_bound or (c.top_bound is not None and top > c.top_bound):
                continue
            factors = tuple(p.factor for p in parts)
            mu_e = sum((p.factor.mu_eval for p in parts), Fraction(0))
            t = HodgeTuple(factors, half - mu_e)
            try:
                d = describe(t)
            except DomainError:
                continue
            if not _matches(c, d):
                continue
            canon = canonicalize(t)
            key = tuple_key(canon)
            if key not in found:
                found[key] = classify_tuple(canon)
    return [found[k] for k in sorted(found)]


# Grading classification ---------------------------------------------------------


def classify_gradings(kind: str, max_rank: int) -> list[tuple[SimpleType, tuple[int, ...]]]:
    """All nonzero {0,1} gradings whose adjoint grading is Hermitian or contact."""
    if kind not in ("hermitian", "contact"):
        raise UsageError(f"kind must be 'hermitian' or 'contact', got {kind!r}")
    out = []
    for t in admissible_types(max_rank):
        datum = build_root_datum(t)
        for e in product((0, 1), repeat=t.rank):
            if not any(e):
                continue
            depth = highest_root_eval(datum, e)
            if kind == "hermitian" and depth == 1:
                out.append((t, e))
            elif kind == "contact" and depth == 2:
                top = sum(1 for a in datum.positive_roots if sum(x * y for x, y in zip(a, e)) == 2)
                if top == 1:
                    out.append((t, e))
    return out
