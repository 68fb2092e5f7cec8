"""Hodge-theoretic data of a tuple (algebra, grading element, highest weight, c).

A tuple lists one or more simple factors, each with a grading element and a
dominant highest weight; the representation U is the outer tensor product and
the one-dimensional center acts by the rational scalar c.  The Hodge
representation V is U itself when U is real and U + U* otherwise, and its
Hodge numbers are read off from the eigenvalues of E + c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import DomainError, HodgeRepError, InvalidTupleError
from .repdata import GradedCharacter, convolve, graded_character, weyl_dimension
from .rootdata import (
    GradingElement,
    RootDatum,
    SimpleType,
    Weight,
    build_root_datum,
    check_grading,
    check_weight,
    diagram_automorphisms,
    dual_weight,
    eval_on_grading,
    highest_root_eval,
    parity_element_eval,
    permute,
)


class RealityType(Enum):
    REAL = "Real"
    COMPLEX = "Complex"
    QUATERNIONIC = "Quaternionic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class AlgebraFactor:
    type: SimpleType
    e: GradingElement
    mu: Weight

    def __post_init__(self):
        datum = build_root_datum(self.type)
        object.__setattr__(self, "e", check_grading(datum, self.e))
        object.__setattr__(self, "mu", check_weight(datum, self.mu, dominant=True, what="highest weight"))

    @property
    def datum(self) -> RootDatum:
        return build_root_datum(self.type)

    def dual(self) -> AlgebraFactor:
        return AlgebraFactor(self.type, self.e, dual_weight(self.datum, self.mu))

    def permuted(self, perm: tuple[int, ...]) -> AlgebraFactor:
        return AlgebraFactor(self.type, permute(self.e, perm), permute(self.mu, perm))

    @property
    def mu_eval(self) -> Fraction:
        return eval_on_grading(self.datum, self.mu, self.e)

    @property
    def dual_eval(self) -> Fraction:
        return eval_on_grading(self.datum, dual_weight(self.datum, self.mu), self.e)

    @property
    def depth(self) -> int:
        return highest_root_eval(self.datum, self.e)

    def __str__(self) -> str:
        e = ",".join(map(str, self.e))
        mu = ",".join(map(str, self.mu))
        return f"({self.type}; e={e}; mu={mu})"


@dataclass(frozen=True)
class HodgeTuple:
    factors: tuple[AlgebraFactor, ...]
    c: Fraction = Fraction(0)

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DomainError("a tuple needs at least one factor")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "c", Fraction(self.c))

    @classmethod
    def simple(cls, type_: SimpleType | str, e, mu, c=0) -> HodgeTuple:
        if isinstance(type_, str):
            type_ = SimpleType.parse(type_)
        return cls((AlgebraFactor(type_, tuple(e), tuple(mu)),), Fraction(c))

    @property
    def mu_eval(self) -> Fraction:
        """mu(E), summed over the factors."""
        return sum((f.mu_eval for f in self.factors), Fraction(0))

    @property
    def dual_eval(self) -> Fraction:
        return sum((f.dual_eval for f in self.factors), Fraction(0))

    @property
    def m(self) -> Fraction:
        return self.mu_eval + self.c

    @property
    def m_star(self) -> Fraction:
        return self.dual_eval - self.c

    @property
    def self_dual_weight(self) -> bool:
        return all(f.dual() == f for f in self.factors)

    def dual(self) -> HodgeTuple:
        """(mu, c) -> (mu*, -c); describes the same Hodge representation."""
        return HodgeTuple(tuple(f.dual() for f in self.factors), -self.c)

    @property
    def dim_u(self) -> int:
        out = 1
        for f in self.factors:
            out *= weyl_dimension(f.datum, f.mu)
        return out

    def __str__(self) -> str:
        return " + ".join(map(str, self.factors)) + f"; c={self.c}"


@dataclass(frozen=True)
class HodgeNumbers:
    level: int
    hodge_numbers: tuple[int, ...]
    reality: RealityType
    dim_v: int


@dataclass(frozen=True)
class HodgeDescriptor:
    level: int
    hodge_numbers: tuple[int, ...]
    reality: RealityType
    dim_v: int
    horizontal: bool
    contact: bool
    period_domain: bool
    cy_type: bool
    adjoint_grading: tuple[tuple[int, ...], ...]
    depth: int
    compact_dim: int
    real_form: str | None = None
    notes: tuple[str, ...] = field(default=())


def _semisimple_reality(t: HodgeTuple) -> RealityType:
    """Reality of U as a module over the semisimple part, ignoring c."""
    if not t.self_dual_weight:
        return RealityType.COMPLEX
    parity = sum((parity_element_eval(f.datum, f.mu, f.e) for f in t.factors), Fraction(0))
    if parity.denominator != 1:
        raise HodgeRepError(f"parity value {parity} of self-dual weight is not an integer; node labeling is broken")
    return RealityType.REAL if parity.numerator % 2 == 0 else RealityType.QUATERNIONIC


def reality_type(t: HodgeTuple) -> RealityType:
    if t.c != 0:
        return RealityType.COMPLEX
    return _semisimple_reality(t)


def validate(t: HodgeTuple) -> None:
    """Raise InvalidTupleError unless t indexes a Hodge representation."""
    for i, f in enumerate(t.factors, 1):
        if not any(f.mu):
            raise InvalidTupleError(
                f"factor {i} has zero highest weight: the factor acts trivially, "
                "so it is not part of the Hodge group (a lone trivial factor gives a level-0 structure)"
            )
    if (2 * t.m).denominator != 1:
        raise InvalidTupleError(f"m = mu(E) + c = {t.m} is not in Z/2")
    if reality_type(t) is RealityType.REAL and t.c != 0:
        raise InvalidTupleError("a real representation requires c = 0")


def total_character(t: HodgeTuple) -> GradedCharacter:
    """Graded character of U under E (without the center shift)."""
    ch = None
    for f in t.factors:
        part = graded_character(f.datum, f.mu, f.e)
        ch = part if ch is None else convolve(ch, part)
    return ch


def v_character(t: HodgeTuple) -> GradedCharacter:
    """Eigenvalues of E + c on V: U shifted by c, plus its dual mirror unless real."""
    u = total_character(t).shifted(t.c)
    if reality_type(t) is RealityType.REAL:
        return u
    dims = dict(u.eigenvalues)
    for k, v in u.mirrored().eigenvalues.items():
        dims[k] = dims.get(k, 0) + v
    return GradedCharacter.from_dict(dims)


def hodge_numbers(t: HodgeTuple) -> HodgeNumbers:
    validate(t)
    reality = reality_type(t)
    ch = v_character(t)
    if reality is RealityType.REAL:
        level = 2 * t.m
    else:
        level = 2 * max(t.m, t.m_star)
    level = int(level)
    half = Fraction(level, 2)
    if ch.top > half or ch.bottom < -half:
        raise InvalidTupleError(f"eigenvalues {list(ch.eigenvalues)} exceed [-n/2, n/2] for n = {level}")
    h = tuple(ch.dim_at(p - half) for p in range(level, -1, -1))
    if h[0] < 1:
        raise HodgeRepError(f"h^(n,0) = 0 for {t}")
    return HodgeNumbers(level, h, reality, sum(h))


def adjoint_grading(f: AlgebraFactor) -> tuple[int, ...]:
    """dim g^(l,-l) for l = depth, ..., -depth."""
    datum = f.datum
    depth = f.depth
    counts = [0] * (depth + 1)
    for a in datum.positive_roots:
        counts[sum(x * y for x, y in zip(a, f.e))] += 1
    upper = [counts[l] for l in range(depth, 0, -1)]
    return tuple(upper + [datum.rank + 2 * counts[0]] + upper[::-1])


def is_horizontal(t: HodgeTuple) -> bool:
    return all(f.depth == 1 for f in t.factors)


def is_contact(t: HodgeTuple) -> bool:
    if len(t.factors) != 1:
        return False
    grading = adjoint_grading(t.factors[0])
    return len(grading) == 5 and grading[0] == 1


def compact_dim(t: HodgeTuple) -> int:
    total = 0
    for f in t.factors:
        grading = adjoint_grading(f)
        depth = (len(grading) - 1) // 2
        total += sum(d for l, d in zip(range(depth, -depth - 1, -1), grading) if l % 2 == 0)
    return total


def _standard_period_domain(f: AlgebraFactor) -> bool:
    t, e, mu = f.type, f.e, f.mu
    r = t.rank
    first = tuple(int(i == 0) for i in range(r))
    if t.family == "C":
        return mu == first and e[r - 1] == 1
    if t.family == "B":
        return mu == first
    if t.family == "D":
        return mu == first and e[r - 2] + e[r - 1] in (0, 2)
    return False


def _alias_period_domain(f: AlgebraFactor) -> bool:
    """Period domains of low-rank algebras met under another name."""
    t, e, mu = f.type, f.e, f.mu
    if t == SimpleType("A", 1):
        # sp(2) on its standard module, so(3) on its vector module
        return mu in ((1,), (2,))
    if t == SimpleType("B", 2):
        # sp(4) standard module: the B2 spin node, the long-root node graded
        return mu == (0, 1) and e[0] == 1
    if t == SimpleType("A", 3):
        # so(6) vector module, with the so(6) condition on the two spin nodes
        return mu == (0, 1, 0) and e[0] + e[2] in (0, 2)
    return False


def is_period_domain(t: HodgeTuple) -> bool:
    if t.c != 0:
        return False
    if len(t.factors) == 2:
        # so(4) = sl(2) + sl(2) on C^2 (x) C^2
        return all(f.type == SimpleType("A", 1) and f.mu == (1,) for f in t.factors)
    if len(t.factors) != 1:
        return False
    f = t.factors[0]
    if _alias_period_domain(f):
        return True
    return any(_standard_period_domain(f.permuted(p)) for p in diagram_automorphisms(f.type))


def _normalized(t: HodgeTuple) -> HodgeTuple:
    """The representative of {t, t.dual()} with m >= m*."""
    return t if t.m >= t.m_star else t.dual()


def is_cy_type(t: HodgeTuple) -> bool:
    t = _normalized(t)
    for f in t.factors:
        if any(x and not g for x, g in zip(f.mu, f.e)):
            return False
    return reality_type(t) is RealityType.REAL or t.m > t.m_star


# Real forms named in the tables of Hermitian and contact gradings, keyed by
# family and the 1-based grading support; "r" stands for the rank.
def real_form_name(f: AlgebraFactor) -> str | None:
    for perm in diagram_automorphisms(f.type):
        g = f.permuted(perm)
        name = _table_name(g.type, tuple(i + 1 for i, x in enumerate(g.e) if x))
        if name:
            return name
    return None


def _table_name(t: SimpleType, support: tuple[int, ...]) -> str | None:
    fam, r = t.family, t.rank
    dim_vector = 2 * r + 1 if fam == "B" else 2 * r
    if fam == "A" and len(support) == 1:
        a = support[0]
        return f"su({a},{r + 1 - a})"
    if fam == "A" and r >= 2 and support == (1, r):
        return f"su(2,{r - 1})"
    if fam in "BD" and support == (1,):
        return f"so(2,{dim_vector - 2})"
    if fam in "BD" and support == (2,):
        return f"so(4,{dim_vector - 4})"
    if fam == "C" and support == (r,):
        return f"sp({2 * r},R)"
    if fam == "C" and support == (1,):
        return f"sp(1,{r - 1})"
    if fam == "D" and support in ((r,), (r - 1,)):
        return f"so*({2 * r})"
    table = {
        ("E", 6, (1,)): "E III",
        ("E", 6, (6,)): "E III",
        ("E", 7, (7,)): "E VII",
        ("E", 6, (2,)): "E II",
        ("E", 7, (1,)): "E VI",
        ("E", 8, (8,)): "E IX",
        ("F", 4, (1,)): "F I",
        ("G", 2, (2,)): "G",
    }
    return table.get((fam, r, support))


def describe(t: HodgeTuple) -> HodgeDescriptor:
    hn = hodge_numbers(t)
    gradings = tuple(adjoint_grading(f) for f in t.factors)
    notes = []
    if t.c != 0 and t.self_dual_weight:
        notes.append(
            f"self-dual highest weight with c = {t.c} != 0 "
            f"(over the semisimple part U is {_semisimple_reality(t).value.lower()})"
        )
    names = [real_form_name(f) for f in t.factors]
    real_form = " + ".join(n for n in names if n) if all(names) else None
    return HodgeDescriptor(
        level=hn.level,
        hodge_numbers=hn.hodge_numbers,
        reality=hn.reality,
        dim_v=hn.dim_v,
        horizontal=is_horizontal(t),
        contact=is_contact(t),
        period_domain=is_period_domain(t),
        cy_type=is_cy_type(t),
        adjoint_grading=gradings,
        depth=max(f.depth for f in t.factors),
        compact_dim=compact_dim(t),
        real_form=real_form,
        notes=tuple(notes),
    )
