"""Root data of the simple complex Lie algebras, in Bourbaki labeling.

Weights are integer tuples in the fundamental-weight basis; roots are integer
tuples in the simple-root basis.  The Cartan matrix follows the convention
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` holds the
fundamental-weight coordinates of the simple root ``alpha_j`` and
``inverse_cartan`` converts weight coordinates into root coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import DomainError, UsageError

Weight = tuple[int, ...]
GradingElement = tuple[int, ...]
Root = tuple[int, ...]

FAMILIES = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Low-rank labels that are isomorphic to a canonical type.
_ALIASES = {
    ("B", 1): "so(3) = sl(2): use A1 (vector representation is 2w1)",
    ("C", 1): "sp(2) = sl(2): use A1",
    ("C", 2): "sp(4) = so(5): use B2 (nodes swapped)",
    ("D", 2): "so(4) = sl(2)+sl(2): use two A1 factors",
    ("D", 3): "so(6) = sl(4): use A3 (vector representation is w2)",
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if (self.family, self.rank) in _ALIASES:
            raise DomainError(
                f"{self.family}{self.rank} is not a canonical type ({_ALIASES[self.family, self.rank]})"
            )
        if self.family in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.family]:
                allowed = ", ".join(map(str, _EXCEPTIONAL_RANKS[self.family]))
                raise DomainError(f"type {self.family} exists only in rank {allowed}")
        elif self.rank < _MIN_RANK[self.family]:
            raise DomainError(
                f"type {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not match:
            raise UsageError(f"cannot parse algebra {text!r}; expected a letter and a rank, e.g. A3")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def dimension(self) -> int:
        r = self.rank
        return {
            "A": r * (r + 2),
            "B": r * (2 * r + 1),
            "C": r * (2 * r + 1),
            "D": r * (2 * r - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(r, 0),
            "F": 52,
            "G": 14,
        }[self.family]


def admissible_types(max_rank: int) -> list[SimpleType]:
    """All canonical simple types of rank at most ``max_rank``, in canonical order."""
    out = []
    for family in FAMILIES:
        if family in _EXCEPTIONAL_RANKS:
            ranks = [r for r in _EXCEPTIONAL_RANKS[family] if r <= max_rank]
        else:
            ranks = range(_MIN_RANK[family], max_rank + 1)
        out.extend(SimpleType(family, r) for r in ranks)
    return out


def _edges(t: SimpleType) -> list[tuple[int, int]]:
    r, f = t.rank, t.family
    if f in "ABC":
        return [(i, i + 1) for i in range(r - 1)]
    if f == "D":
        return [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
    if f == "E":
        return [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, r - 1)]
    if f == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def _half_lengths(t: SimpleType) -> tuple[int, ...]:
    """(alpha_i, alpha_i)/2 with short roots normalised to 1."""
    r, f = t.rank, t.family
    if f == "B":
        return (2,) * (r - 1) + (1,)
    if f == "C":
        return (1,) * (r - 1) + (2,)
    if f == "F":
        return (2, 2, 1, 1)
    if f == "G":
        return (1, 3)
    return (1,) * r


def _invert(matrix: list[list[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if rows[i][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        scale = rows[col][col]
        rows[col] = [x / scale for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """Close the simple roots under root strings, one height at a time."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(r):
                # alpha_i-string through beta: beta - q alpha_i, ..., beta + p alpha_i
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return tuple(sorted(roots, key=lambda a: (sum(a), a)))


@dataclass(frozen=True)
class RootDatum:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    symmetrizer: tuple[int, ...]
    rho: Weight
    # Derived tables, kept for speed.
    roots_in_weights: tuple[Weight, ...] = field(repr=False, compare=False)
    weight_gram: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    # Every table is a function of the type, and data are built once per type,
    # so the type alone is a cheap key for the function caches.
    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.type == other.type

    def __hash__(self):
        return hash(self.type)

    @property
    def rank(self) -> int:
        return self.type.rank

    def simple_root_in_weights(self, i: int) -> Weight:
        return tuple(row[i] for row in self.cartan)

    def to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        return tuple(sum(row[j] * w[j] for j in range(self.rank)) for row in self.inverse_cartan)

    def root_to_weight(self, a: Root) -> Weight:
        return tuple(sum(row[j] * a[j] for j in range(self.rank)) for row in self.cartan)

    def pair_with_root(self, w: Weight, a: Root) -> int:
        """Symmetrised pairing (w, alpha) for w in weight and alpha in root coordinates."""
        return sum(w[k] * self.symmetrizer[k] * a[k] for k in range(self.rank))

    def inner(self, v: Weight, w: Weight) -> Fraction:
        g = self.weight_gram
        return sum((g[i][j] * v[i] * w[j] for i in range(self.rank) for j in range(self.rank)),
                   Fraction(0))


@lru_cache(maxsize=None)
def build_root_datum(t: SimpleType) -> RootDatum:
    r = t.rank
    half = _half_lengths(t)
    gram = [[2 * half[i] if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in _edges(t):
        gram[i][j] = gram[j][i] = -max(half[i], half[j])
    cartan = tuple(tuple(2 * gram[i][j] // gram[i][i] for j in range(r)) for i in range(r))
    inverse = _invert([list(row) for row in cartan])
    roots = _positive_roots(cartan)
    weight_gram = tuple(tuple(inverse[i][j] * half[i] for j in range(r)) for i in range(r))
    datum = RootDatum(
        type=t,
        cartan=cartan,
        inverse_cartan=inverse,
        positive_roots=roots,
        highest_root=roots[-1],
        symmetrizer=half,
        rho=(1,) * r,
        roots_in_weights=(),
        weight_gram=weight_gram,
    )
    object.__setattr__(datum, "roots_in_weights", tuple(datum.root_to_weight(a) for a in roots))
    return datum


def check_weight(datum: RootDatum, w: Weight, *, dominant: bool = False, what: str = "weight") -> Weight:
    w = tuple(w)
    if len(w) != datum.rank:
        raise DomainError(f"{what} {list(w)} has length {len(w)}, expected rank {datum.rank} of {datum.type}")
    if dominant and any(x < 0 for x in w):
        raise DomainError(f"{what} {list(w)} is not dominant")
    return w


def check_grading(datum: RootDatum, e: GradingElement) -> GradingElement:
    e = tuple(e)
    if len(e) != datum.rank:
        raise DomainError(f"grading {list(e)} has length {len(e)}, expected rank {datum.rank} of {datum.type}")
    if any(x not in (0, 1) for x in e):
        raise DomainError(f"grading {list(e)} must have entries in {{0,1}}")
    if not any(e):
        raise DomainError("grading element must be nonzero (the grading would be trivial)")
    return e


@lru_cache(maxsize=65536)
def _root_coords(datum: RootDatum, w: Weight) -> tuple[Fraction, ...]:
    return datum.to_root_coords(w)


def eval_on_grading(datum: RootDatum, w: Weight, e: GradingElement) -> Fraction:
    """w(E) for E = sum of A^a over the support of e."""
    coords = _root_coords(datum, tuple(w))
    return sum((coords[a] for a in range(datum.rank) if e[a]), Fraction(0))


def parity_element_eval(datum: RootDatum, w: Weight, e: GradingElement) -> Fraction:
    """w(T) for T = 2 * sum of A^i over the nodes with e_i = 0."""
    coords = _root_coords(datum, tuple(w))
    return 2 * sum((coords[i] for i in range(datum.rank) if not e[i]), Fraction(0))


def highest_root_eval(datum: RootDatum, e: GradingElement) -> int:
    return sum(h * x for h, x in zip(datum.highest_root, e))


def duality_permutation(t: SimpleType) -> tuple[int, ...]:
    """Node permutation induced by -w0 (0-based image of each node)."""
    r = t.rank
    perm = list(range(r))
    if t.family == "A":
        perm = [r - 1 - i for i in range(r)]
    elif t.family == "D" and r % 2 == 1:
        perm[r - 2], perm[r - 1] = r - 1, r - 2
    elif t.family == "E" and r == 6:
        perm = [5, 1, 4, 3, 2, 0]
    return tuple(perm)


def permute(v: tuple, perm: tuple[int, ...]) -> tuple:
    """Move the entry at node i to node perm[i]."""
    out = [None] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


def dual_weight(datum: RootDatum, w: Weight) -> Weight:
    return permute(tuple(w), duality_permutation(datum.type))


def diagram_automorphisms(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """All Dynkin diagram automorphisms as node permutations, identity first."""
    r = t.rank
    ident = tuple(range(r))
    if t.family == "A" and r > 1:
        return ident, tuple(r - 1 - i for i in range(r))
    if t.family == "D" and r == 4:
        out = []
        for image in permutations((0, 2, 3)):
            perm = [0, 1, 2, 3]
            for src, dst in zip((0, 2, 3), image):
                perm[src] = dst
            out.append(tuple(perm))
        return tuple(sorted(out, key=lambda p: p != ident))
    if t.family == "D":
        swap = list(ident)
        swap[r - 2], swap[r - 1] = r - 1, r - 2
        return ident, tuple(swap)
    if t.family == "E" and r == 6:
        return ident, (5, 1, 4, 3, 2, 0)
    return (ident,)
