"""Parametric families of tuples stored as JSON fixtures.

A fixture lists the search that should reproduce it and the expected tuples,
either as families in integer parameters or as explicit instances.  Ranks,
grading nodes, weight coefficients, c and Hodge numbers are small arithmetic
expressions in the parameters, evaluated exactly with a restricted AST walker.

Fixture layout::

    {
      "description": "...",
      "searches": [{"weight": 2, "pattern": "1,*,1", "require": ["horizontal"],
                    "max_factors": 1, "min_factors": 1}],
      "families": [{"name": "...", "params": {"r": {"min": 2}},
                    "factors": [{"type": "B", "rank": "r", "e": [1], "mu": {"1": 1}}],
                    "c": "0", "h": ["1", "2*r-1", "1"]}],
      "instances": [{"name": "...", "factors": [{"type": "A1", "e": [1], "mu": [2]}],
                     "c": "0", "h": [1, 1, 1]}]
    }

Parameters without an explicit "max" run up to the rank bound; instances whose
factors exceed the bound are dropped.
"""

from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb

from .enumerator import SearchConstraints, canonicalize, parse_pattern, tuple_key
from .errors import DomainError, UsageError
from .hodgecore import AlgebraFactor, HodgeTuple
from .rootdata import SimpleType

_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
    ast.Pow: operator.pow,
}
_COMPARE = {
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
}
_FUNCTIONS = {"binom": comb, "min": min, "max": max}


def evaluate(expr: str | int, env: dict[str, int]) -> Fraction | bool:
    """Exact value of an arithmetic expression over the parameters in env."""
    if isinstance(expr, int):
        return Fraction(expr)
    try:
        tree = ast.parse(str(expr), mode="eval")
    except SyntaxError:
        raise UsageError(f"bad fixture expression {expr!r}") from None
    return _walk(tree.body, env, expr)


def _walk(node, env, src):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name) and node.id in env:
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_walk(node.operand, env, src)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        return _BINARY[type(node.op)](_walk(node.left, env, src), _walk(node.right, env, src))
    if isinstance(node, ast.Compare) and len(node.ops) == 1 and type(node.ops[0]) in _COMPARE:
        return _COMPARE[type(node.ops[0])](_walk(node.left, env, src), _walk(node.comparators[0], env, src))
    if isinstance(node, ast.BoolOp):
        values = [_walk(v, env, src) for v in node.values]
        return all(values) if isinstance(node.op, ast.And) else any(values)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCTIONS:
        args = [_walk(a, env, src) for a in node.args]
        if node.func.id == "binom":
            args = [int(a) for a in args]
        return Fraction(_FUNCTIONS[node.func.id](*args))
    raise UsageError(f"unsupported construct in fixture expression {src!r}")


def integer(expr, env) -> int:
    value = evaluate(expr, env)
    if value.denominator != 1:
        raise UsageError(f"fixture expression {expr!r} is not an integer at {env}")
    return int(value)


@dataclass(frozen=True)
class ExpectedTuple:
    family: str
    tuple: HodgeTuple
    hodge_numbers: tuple[int, ...] | None
    params: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    searches: tuple[dict, ...]
    families: tuple[dict, ...]
    instances: tuple[dict, ...]

    def constraints(self, max_rank: int, max_dim_v: int) -> list[SearchConstraints]:
        out = []
        for s in self.searches:
            out.append(SearchConstraints(
                weight_n=s["weight"],
                hodge_pattern=parse_pattern(s["pattern"]),
                require=frozenset(s.get("require", ())),
                max_rank=max_rank,
                max_factors=s.get("max_factors", 3),
                min_factors=s.get("min_factors", 1),
                max_dim_v=s.get("max_dim_v", max_dim_v),
                require_nonzero_middle=s.get("require_nonzero_middle", True),
            ))
        return out

    def expected(self, max_rank: int, max_factors: int = 3) -> list[ExpectedTuple]:
        out = []
        for fam in self.families:
            for env in parameter_grid(fam.get("params", {}), max_rank):
                if "where" in fam and not evaluate(fam["where"], env):
                    continue
                t = _build(fam, env, max_rank, max_factors)
                if t is not None:
                    h = fam.get("h")
                    hn = tuple(integer(x, env) for x in h) if h is not None else None
                    out.append(ExpectedTuple(fam["name"], t, hn, tuple(sorted(env.items()))))
        for inst in self.instances:
            t = _build(inst, {}, max_rank, max_factors)
            if t is not None:
                h = inst.get("h")
                out.append(ExpectedTuple(inst["name"], t, tuple(h) if h is not None else None))
        return out

    def expected_keys(self, max_rank: int, max_factors: int = 3) -> set[tuple]:
        return {tuple_key(canonicalize(x.tuple)) for x in self.expected(max_rank, max_factors)}


def parameter_grid(params: dict, max_rank: int):
    names = list(params)

    def rec(i, env):
        if i == len(names):
            yield dict(env)
            return
        spec = params[names[i]]
        lo = integer(spec.get("min", 1), env)
        hi = integer(spec["max"], env) if "max" in spec else max_rank + 1
        for value in range(lo, hi + 1):
            env[names[i]] = value
            yield from rec(i + 1, env)
        env.pop(names[i], None)

    yield from rec(0, {})


def _build(spec: dict, env: dict, max_rank: int, max_factors: int) -> HodgeTuple | None:
    factors = []
    if len(spec["factors"]) > max_factors:
        return None
    for f in spec["factors"]:
        if "rank" in f:
            family, rank = f["type"], integer(f["rank"], env)
        else:
            parsed = SimpleType.parse(f["type"])
            family, rank = parsed.family, parsed.rank
        if rank > max_rank:
            return None
        try:
            t = SimpleType(family, rank)
        except DomainError:
            return None
        nodes = {integer(x, env) for x in f["e"]}
        e = tuple(int(i + 1 in nodes) for i in range(rank))
        mu_spec = f["mu"]
        if isinstance(mu_spec, list):
            mu = tuple(mu_spec)
        else:
            mu = [0] * rank
            for node, coeff in mu_spec.items():
                mu[integer(node, env) - 1] += integer(coeff, env)
            mu = tuple(mu)
        if len(e) != rank or len(mu) != rank or not all(1 <= i <= rank for i in nodes):
            raise UsageError(f"fixture entry {spec.get('name')!r} does not fit {t} at {env}")
        factors.append(AlgebraFactor(t, e, mu))
    return HodgeTuple(tuple(factors), evaluate(spec.get("c", "0"), env))


def load_data(name: str) -> dict:
    path = resources.files("hodgerep") / "fixtures" / f"{name}.json"
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise UsageError(f"no fixture named {name!r}; known: {fixture_names()}") from None


def load_fixture(name: str) -> Fixture:
    data = load_data(name)
    if "searches" not in data:
        raise UsageError(f"{name!r} is a table, not a search fixture")
    return Fixture(
        name=name,
        description=data.get("description", ""),
        searches=tuple(data.get("searches", ())),
        families=tuple(data.get("families", ())),
        instances=tuple(data.get("instances", ())),
    )


def fixture_names() -> list[str]:
    """Search fixtures only; table data files are skipped."""
    folder = resources.files("hodgerep") / "fixtures"
    out = []
    for p in folder.iterdir():
        if p.name.endswith(".json") and "searches" in json.loads(p.read_text()):
            out.append(p.name[:-5])
    return sorted(out)


def family_report(tuples, fixture_list=None, max_rank: int = 8, max_factors: int = 3) -> list[str]:
    """Group emitted tuples by the stored families they instantiate.

    Cosmetic only: tuples outside every stored family are listed as unmatched.
    """
    fixture_list = fixture_list if fixture_list is not None else [load_fixture(n) for n in fixture_names()]
    index: dict[tuple, list[str]] = {}
    for fx in fixture_list:
        for x in fx.expected(max_rank, max_factors):
            label = f"{fx.name}: {x.family}"
            key = tuple_key(canonicalize(x.tuple))
            index.setdefault(key, [])
            if label not in index[key]:
                index[key].append(label)
    groups: dict[str, list[str]] = {}
    unmatched = []
    for t in tuples:
        labels = index.get(tuple_key(canonicalize(t)))
        if not labels:
            unmatched.append(str(t))
        for label in labels or ():
            groups.setdefault(label, []).append(str(t))
    lines = [f"{label}: {len(items)} instance(s)" for label, items in sorted(groups.items())]
    lines += [f"unmatched: {item}" for item in unmatched]
    return lines
