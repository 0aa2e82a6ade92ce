"""Segre-type classes s_j in Z[p1..pr].

s_j is the weight-j coefficient of (1 + p1 + ... + pr)^(-1).  They are
produced by the recursion s_j = -p1*s_{j-1} - ... - pr*s_{j-r} starting from
s_0 = 1, with s_j = 0 for negative j.
"""

import threading

from pontcalc.core.polynomial import GradedPolynomial, VarSet


class SegreTable:
    """Memoized s_j for a fixed number of variables r."""

    def __init__(self, r):
        if r < 0:
            raise ValueError("r must be nonnegative")
        self.r = r
        self.varset = VarSet.pontryagin(r)
        self._p = [GradedPolynomial.var(self.varset, n) for n in self.varset.names]
        self._cache = [GradedPolynomial.one(self.varset)]
        self._lock = threading.Lock()

    def __getitem__(self, j):
        if j < 0:
            return GradedPolynomial.zero(self.varset)
        with self._lock:
            cache = self._cache
            while len(cache) <= j:
                n = len(cache)
                acc = GradedPolynomial.zero(self.varset)
                for i in range(1, min(n, self.r) + 1):
                    acc = acc - self._p[i - 1] * cache[n - i]
                cache.append(acc)
            return cache[j]


_tables = {}
_tables_lock = threading.Lock()


def segre_table(r):
    with _tables_lock:
        table = _tables.get(r)
        if table is None:
            table = _tables[r] = SegreTable(r)
        return table


def segre(r, j):
    return segre_table(r)[j]


def segre_generators(r, d):
    """The r classes s_d, ..., s_{d+r-1} that generate J_d for d >= 0."""
    if d < 1:
        raise ValueError("d must be positive")
    table = segre_table(r)
    return [table[j] for j in range(d, d + r)]
