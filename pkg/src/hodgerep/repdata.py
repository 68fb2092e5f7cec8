"""Weight systems, Weyl dimensions and graded characters of irreducible modules."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from types import MappingProxyType
from typing import Mapping

from .config import active_caps
from .errors import ResourceCapError
from .rootdata import (
    GradingElement,
    RootDatum,
    Weight,
    check_grading,
    check_weight,
    dual_weight,
    eval_on_grading,
)


@dataclass(frozen=True)
class WeightSystem:
    highest_weight: Weight
    entries: Mapping[Weight, int]

    @classmethod
    def from_dict(cls, highest_weight: Weight, mults: dict[Weight, int]) -> WeightSystem:
        ordered = {w: mults[w] for w in sorted(mults)}
        return cls(tuple(highest_weight), MappingProxyType(ordered))

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other):
        if not isinstance(other, WeightSystem):
            return NotImplemented
        return self.highest_weight == other.highest_weight and dict(self.entries) == dict(other.entries)

    __hash__ = None


@dataclass(frozen=True)
class GradedCharacter:
    """Eigenvalue -> dimension, listed from the top eigenvalue down."""

    eigenvalues: Mapping[Fraction, int]
    top: Fraction
    bottom: Fraction

    @classmethod
    def from_dict(cls, dims: dict[Fraction, int]) -> GradedCharacter:
        ordered = {k: dims[k] for k in sorted(dims, reverse=True) if dims[k]}
        keys = list(ordered)
        return cls(MappingProxyType(ordered), keys[0], keys[-1])

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self.eigenvalues.values())

    @property
    def dimension(self) -> int:
        return sum(self.eigenvalues.values())

    def dim_at(self, eigenvalue: Fraction) -> int:
        return self.eigenvalues.get(Fraction(eigenvalue), 0)

    def mirrored(self) -> GradedCharacter:
        return GradedCharacter.from_dict({-k: v for k, v in self.eigenvalues.items()})

    def shifted(self, c: Fraction) -> GradedCharacter:
        return GradedCharacter.from_dict({k + c: v for k, v in self.eigenvalues.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return list(self.eigenvalues.items()) == list(other.eigenvalues.items())

    __hash__ = None


def convolve(first: GradedCharacter, second: GradedCharacter) -> GradedCharacter:
    """Character of a tensor product: eigenvalues add, dimensions multiply."""
    out: dict[Fraction, int] = defaultdict(int)
    for a, m in first.eigenvalues.items():
        for b, n in second.eigenvalues.items():
            out[a + b] += m * n
    return GradedCharacter.from_dict(dict(out))


def weyl_dimension(datum: RootDatum, mu: Weight) -> int:
    mu = check_weight(datum, mu, dominant=True, what="highest weight")
    shifted = tuple(x + 1 for x in mu)
    num = den = 1
    for a in datum.positive_roots:
        num *= datum.pair_with_root(shifted, a)
        den *= datum.pair_with_root(datum.rho, a)
    return num // den


def levi_dimension(datum: RootDatum, mu: Weight, e: GradingElement) -> int:
    """Dimension of the top E-eigenspace: Weyl's formula for the Levi factor."""
    shifted = tuple(x + 1 for x in mu)
    num = den = 1
    for a in datum.positive_roots:
        if any(a[i] and e[i] for i in range(datum.rank)):
            continue
        num *= datum.pair_with_root(shifted, a)
        den *= datum.pair_with_root(datum.rho, a)
    return num // den


def reflect(datum: RootDatum, w: Weight, i: int) -> Weight:
    k = w[i]
    return tuple(x - k * row[i] for x, row in zip(w, datum.cartan))


def dominant_representative(datum: RootDatum, w: Weight) -> Weight:
    w = tuple(w)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = reflect(datum, w, i)
                break
        else:
            return w


def weyl_orbit(datum: RootDatum, dominant: Weight) -> list[Weight]:
    """Orbit of a dominant weight, generated by reflecting positive coordinates."""
    seen = {dominant}
    frontier = [dominant]
    while frontier:
        nxt = []
        for w in frontier:
            for i, x in enumerate(w):
                if x > 0:
                    image = reflect(datum, w, i)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
        frontier = nxt
    return sorted(seen)


def _dominant_weights(datum: RootDatum, mu: Weight) -> list[tuple[int, Weight]]:
    """Dominant weights of U_mu with their depth (height of mu - lambda)."""
    heights = [sum(a) for a in datum.positive_roots]
    depth = {mu: 0}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            for a_w, h in zip(datum.roots_in_weights, heights):
                cand = tuple(x - y for x, y in zip(lam, a_w))
                if min(cand) >= 0 and cand not in depth:
                    depth[cand] = depth[lam] + h
                    nxt.append(cand)
        frontier = nxt
    return sorted(((d, w) for w, d in depth.items()), key=lambda p: (p[0], p[1]))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(datum: RootDatum, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    gram = datum.weight_gram
    scale = lcm(*(x.denominator for row in gram for x in row))
    igram = [[int(x * scale) for x in row] for row in gram]
    r = datum.rank

    def norm(v):
        return sum(igram[i][j] * v[i] * v[j] for i in range(r) for j in range(r))

    top = norm(tuple(x + 1 for x in mu))
    # (w, alpha) = sum_k w_k * d_k * a_k with d the symmetrizer
    paired = [
        (tuple(datum.symmetrizer[k] * a[k] for k in range(r)), a_w)
        for a, a_w in zip(datum.positive_roots, datum.roots_in_weights)
    ]
    mult: dict[Weight, int] = {}
    for _, lam in _dominant_weights(datum, mu):
        if lam == mu:
            mult[lam] = 1
            continue
        total = 0
        for sa, a_w in paired:
            step = lam
            while True:
                step = tuple(x + y for x, y in zip(step, a_w))
                m = mult.get(step if min(step) >= 0 else dominant_representative(datum, step))
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(step, sa))
        denom = top - norm(tuple(x + 1 for x in lam))
        value, rem = divmod(2 * scale * total, denom)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {lam} for {datum.type} {mu}")
        if value:
            mult[lam] = value
    return tuple(sorted(mult.items()))


def dominant_character(datum: RootDatum, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights only."""
    mu = check_weight(datum, mu, dominant=True, what="highest weight")
    _enforce_cap(datum, mu)
    return dict(_dominant_multiplicities(datum, mu))


def _enforce_cap(datum: RootDatum, mu: Weight, cap: int | None = None) -> int:
    cap = active_caps().weight_system_dim if cap is None else cap
    dim = weyl_dimension(datum, mu)
    if dim > cap:
        raise ResourceCapError("weight_system_dim", cap, dim)
    return dim


def weight_system(datum: RootDatum, mu: Weight, cap: int | None = None) -> WeightSystem:
    mu = check_weight(datum, mu, dominant=True, what="highest weight")
    _enforce_cap(datum, mu, cap)
    return WeightSystem.from_dict(mu, dict(_all_weights(datum, mu)))


@lru_cache(maxsize=1024)
def _all_weights(datum: RootDatum, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    out = []
    for lam, m in _dominant_multiplicities(datum, mu):
        out.extend((w, m) for w in weyl_orbit(datum, lam))
    return tuple(out)


@lru_cache(maxsize=65536)
def _graded(datum: RootDatum, mu: Weight, e: GradingElement) -> GradedCharacter:
    functional = [eval_on_grading(datum, tuple(int(i == j) for j in range(datum.rank)), e)
                  for i in range(datum.rank)]
    # integer arithmetic on the common denominator, one division per bucket
    scale = lcm(*(f.denominator for f in functional))
    ifunctional = [int(f * scale) for f in functional]
    dims: dict[int, int] = defaultdict(int)
    for w, m in _all_weights(datum, mu):
        dims[sum(f * x for f, x in zip(ifunctional, w))] += m
    ch = GradedCharacter.from_dict({Fraction(k, scale): v for k, v in dims.items()})
    _check_progression(datum, mu, e, ch)
    return ch


def _check_progression(datum, mu, e, ch: GradedCharacter) -> None:
    expected_top = eval_on_grading(datum, mu, e)
    expected_bottom = -eval_on_grading(datum, dual_weight(datum, mu), e)
    keys = list(ch.eigenvalues)
    if ch.top != expected_top or ch.bottom != expected_bottom:
        raise ArithmeticError(f"graded character of {datum.type} {mu} has wrong extremes")
    if any(a - b != 1 for a, b in zip(keys, keys[1:])):
        raise ArithmeticError(f"graded character of {datum.type} {mu} has a gap: {keys}")


def graded_character(datum: RootDatum, mu: Weight, e: GradingElement, cap: int | None = None) -> GradedCharacter:
    mu = check_weight(datum, mu, dominant=True, what="highest weight")
    e = check_grading(datum, e)
    _enforce_cap(datum, mu, cap)
    return _graded(datum, mu, e)
