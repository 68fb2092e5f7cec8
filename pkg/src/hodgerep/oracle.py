"""Brute-force weight multiplicities via Kostant's formula (verification only).

Shares nothing with the Freudenthal route beyond the Cartan matrix: the Weyl
group is enumerated as explicit integer matrices, the partition function by
memoised recursion over the positive roots, and every candidate weight in the
box between mu and its lowest weight is tested.
"""

from __future__ import annotations

from functools import lru_cache

from .config import active_caps
from .errors import ResourceCapError
from .repdata import WeightSystem, weyl_dimension
from .rootdata import RootDatum, Weight, check_weight


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> tuple[tuple[tuple[tuple[int, ...], ...], int], ...]:
    """All (matrix, sign) pairs acting on root coordinates."""
    r = datum.rank
    gens = []
    for i in range(r):
        # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i on root coordinates
        rows = [[int(a == b) for b in range(r)] for a in range(r)]
        for j in range(r):
            rows[i][j] -= datum.cartan[i][j]
        gens.append(tuple(tuple(row) for row in rows))
    ident = tuple(tuple(int(a == b) for b in range(r)) for a in range(r))
    group = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mat_mul(s, g)
                if h not in group:
                    group[h] = -group[g]
                    nxt.append(h)
        frontier = nxt
    return tuple(group.items())


class _PartitionCounter:
    def __init__(self, roots):
        self.roots = roots
        self.cache = {}

    def count(self, vec, start=0):
        if any(x < 0 for x in vec):
            return 0
        if start == len(self.roots):
            return int(not any(vec))
        key = (vec, start)
        if key in self.cache:
            return self.cache[key]
        root = self.roots[start]
        total = 0
        cur = vec
        while all(x >= 0 for x in cur):
            total += self.count(cur, start + 1)
            cur = tuple(x - y for x, y in zip(cur, root))
        self.cache[key] = total
        return total


def oracle_weight_system(datum: RootDatum, mu: Weight) -> WeightSystem:
    mu = check_weight(datum, mu, dominant=True, what="highest weight")
    caps = active_caps()
    if datum.rank > caps.oracle_rank:
        raise ResourceCapError("oracle_rank", caps.oracle_rank, datum.rank)
    dim = weyl_dimension(datum, mu)
    if dim > caps.oracle_dim:
        raise ResourceCapError("oracle_dim", caps.oracle_dim, dim)

    r = datum.rank
    inv = datum.inverse_cartan
    def to_roots(w):
        return tuple(sum(inv[i][j] * w[j] for j in range(r)) for i in range(r))

    mu_rho = to_roots(tuple(x + 1 for x in mu))
    # lowest weight of U_mu is -mu^*, so every weight lies in mu - [0, mu + mu^*]
    lowest_gap = _lowest_gap(datum, mu)
    counter = _PartitionCounter(datum.positive_roots)
    group = weyl_group(datum)
    # w(mu + rho) - (mu + rho) lies in the root lattice, so work with integers
    shifts = [
        (tuple(int(a - b) for a, b in zip(_apply(g, mu_rho), mu_rho)), sign) for g, sign in group
    ]
    mu_roots = to_roots(mu)

    cartan = datum.cartan
    mults = {}
    for gap in _box(lowest_gap):
        lam_roots = tuple(m - g for m, g in zip(mu_roots, gap))
        lam = tuple(int(sum(cartan[i][j] * lam_roots[j] for j in range(r))) for i in range(r))
        if min(lam) < 0:
            continue
        total = 0
        for shift, sign in shifts:
            diff = tuple(a + b for a, b in zip(shift, gap))
            if min(diff) >= 0:
                total += sign * counter.count(diff)
        if total:
            # spread over the orbit with the explicit group matrices
            for g, _ in group:
                image = _apply(g, lam_roots)
                w = tuple(int(sum(cartan[i][j] * image[j] for j in range(r))) for i in range(r))
                mults[w] = total
    return WeightSystem.from_dict(mu, mults)


def _apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _lowest_gap(datum: RootDatum, mu: Weight) -> tuple[int, ...]:
    """Root coordinates of mu - w0(mu), found as the longest Weyl image of mu."""
    r = datum.rank
    mu_roots = tuple(sum(datum.inverse_cartan[i][j] * mu[j] for j in range(r)) for i in range(r))
    best = None
    for g, _ in weyl_group(datum):
        image = _apply(g, mu_roots)
        gap = tuple(a - b for a, b in zip(mu_roots, image))
        if best is None or sum(gap) > sum(best):
            best = gap
    return tuple(int(x) for x in best)


def _box(bounds):
    if not bounds:
        yield ()
        return
    for rest in _box(bounds[1:]):
        for k in range(bounds[0] + 1):
            yield (k,) + rest
