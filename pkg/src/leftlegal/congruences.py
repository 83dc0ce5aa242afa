"""Congruence lattices of small finite semigroups.

Every congruence is the join of the principal congruences it contains, so
the lattice is generated by closing the principal congruences under join.
This avoids walking all set partitions.
"""

from functools import reduce

from .errors import SizeError
from .finite import Partition, basic_predicates, quotient, require_associative

__all__ = [
    "MAX_CONGRUENCE_ORDER",
    "principal_congruence",
    "enumerate_congruences",
    "monolith",
    "is_subdirectly_irreducible",
    "least_semilattice_congruence",
    "format_congruence",
]

MAX_CONGRUENCE_ORDER = 8


def _check_size(t, limit):
    limit = MAX_CONGRUENCE_ORDER if limit is None else limit
    if t.order > limit:
        raise SizeError(f"order {t.order} exceeds the congruence enumeration bound {limit}")


def principal_congruence(t, a, b):
    """Smallest congruence identifying ``a`` and ``b``."""
    n, T = t.order, t.table
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    pending = [(a, b)] if union(a, b) else []
    while pending:
        x, y = pending.pop()
        for c in range(n):
            for p, q in ((T[x, c], T[y, c]), (T[c, x], T[c, y])):
                if union(int(p), int(q)):
                    pending.append((int(p), int(q)))
    return Partition([find(i) for i in range(n)])


def _sort_key(p):
    return (-p.n_blocks, p.labels)


def enumerate_congruences(t, limit=None):
    """All congruences of ``t``, finest first."""
    require_associative(t)
    _check_size(t, limit)
    n = t.order
    principals = {principal_congruence(t, a, b) for a in range(n) for b in range(a + 1, n)}
    found = {Partition.discrete(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principals:
                j = c.join(p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=_sort_key)


def monolith(t, limit=None):
    """Intersection of all congruences other than equality (None for order 1)."""
    nontrivial = [c for c in enumerate_congruences(t, limit) if not c.is_discrete()]
    if not nontrivial:
        return None
    return reduce(Partition.meet, nontrivial)


def is_subdirectly_irreducible(t, limit=None):
    """Order-1 semigroups are reported as not subdirectly irreducible."""
    m = monolith(t, limit)
    return m is not None and not m.is_discrete()


def least_semilattice_congruence(t, limit=None):
    semilattice = [
        c for c in enumerate_congruences(t, limit)
        if basic_predicates(quotient(t, c))["is_semilattice"]
    ]
    eta = reduce(Partition.meet, semilattice)
    # meets of semilattice congruences are semilattice congruences
    assert basic_predicates(quotient(t, eta))["is_semilattice"]
    return eta


def format_congruence(t, p):
    return p.format(t.names)
