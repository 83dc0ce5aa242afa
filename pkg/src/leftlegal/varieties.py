"""Varieties of left legal semigroups, isomorphism, and small-order census.

Membership in each named variety is decided by exhaustive identity checks,
so every statement about varieties made here is a statement about the
finite tables at hand.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import permutations, product

import numpy as np

from .errors import SizeError
from .finite import (
    CayleyTable,
    Partition,
    direct_product,
    is_zero_semigroup,
    parse_identity,
    quotient,
    require_associative,
    satisfies_identity,
    square_ideal,
)

__all__ = [
    "VarietyNode",
    "VARIETIES",
    "NODES",
    "DIAGRAM_EDGES",
    "MEETS",
    "variety_membership",
    "is_upward_closed",
    "invariants",
    "are_isomorphic",
    "canonical_form",
    "enumerate_semigroups",
    "census",
    "square_kernel",
    "rees_congruence",
    "subdirect_image",
    "lrb_zm_decomposition",
]


@dataclass(frozen=True)
class VarietyNode:
    name: str
    identities: tuple = ()
    zero_constant: bool = False
    trivial: bool = False

    def contains(self, t):
        if self.trivial and t.order != 1:
            return False
        if self.zero_constant and not is_zero_semigroup(t):
            return False
        return all(satisfies_identity(t, i) for i in self.identities)

    def __str__(self):
        conds = [str(i) for i in self.identities]
        if self.zero_constant:
            conds.append("ab=0")
        if self.trivial:
            conds.append("a=b")
        return f"{self.name} ({', '.join(conds)})"


def _node(name, *identities, **flags):
    return VarietyNode(name, tuple(parse_identity(i) for i in identities), **flags)


VARIETIES = {
    v.name: v
    for v in (
        _node("T", trivial=True),
        _node("LZ", "ab=a"),
        _node("ZM", zero_constant=True),
        _node("SL", "aa=a", "ab=ba"),
        _node("B", "ab=ac"),
        _node("D", "ab=ba", "ab=aab"),
        _node("LNB", "aa=a", "abc=acb"),
        _node("C", "abc=acb", "ab=aab"),
        _node("LRB", "aa=a", "aba=ab"),
        _node("A", "aba=ab", "ab=aab"),
        _node("LLS", "aba=ab"),
    )
}
NODES = tuple(VARIETIES)

# (smaller, larger); ZM-A is drawn as its own edge in the diagram
DIAGRAM_EDGES = (
    ("T", "LZ"), ("T", "ZM"), ("T", "SL"),
    ("LZ", "B"), ("ZM", "B"),
    ("LZ", "LNB"), ("SL", "LNB"),
    ("ZM", "D"), ("SL", "D"),
    ("B", "C"), ("D", "C"), ("LNB", "C"),
    ("LNB", "LRB"),
    ("C", "A"), ("LRB", "A"), ("ZM", "A"),
    ("A", "LLS"),
)

# (left, right, meet)
MEETS = (("B", "LNB", "LZ"), ("C", "LRB", "LNB"), ("D", "LNB", "SL"))


def is_upward_closed(members):
    members = set(members)
    return all(hi in members for lo, hi in DIAGRAM_EDGES if lo in members)


def variety_membership(t):
    """Names of the diagram nodes containing ``t``, bottom to top."""
    require_associative(t)
    members = tuple(name for name, v in VARIETIES.items() if v.contains(t))
    if not is_upward_closed(members):
        raise RuntimeError(f"membership {members} is not upward closed")
    return members


# ---------------------------------------------------------------- isomorphism

def invariants(t):
    """Per-element isomorphism invariants."""
    T, n = t.table, t.order
    ids = np.arange(n)
    out = []
    for a in range(n):
        seen, x = [], a
        while x not in seen:
            seen.append(x)
            x = int(T[x, a])
        out.append((
            len(seen),
            len(seen) - seen.index(x),
            int((T == a).sum()),
            len(set(T[a].tolist())),
            len(set(T[:, a].tolist())),
            int((T[a] == a).sum()),
            int((T[:, a] == a).sum()),
            int((T[a] == ids).sum()),
            int((T[:, a] == ids).sum()),
        ))
    return out


def are_isomorphic(t1, t2):
    """A bijection ``f`` (as a tuple, ``f[i]`` indexes ``t2``) with
    ``f(ab) = f(a)f(b)``, or None."""
    if t1.order != t2.order:
        return None
    n = t1.order
    inv1, inv2 = invariants(t1), invariants(t2)
    if sorted(inv1) != sorted(inv2):
        return None
    A, B = t1.table.tolist(), t2.table.tolist()
    # rarest invariant classes first
    freq = {}
    for k in inv1:
        freq[k] = freq.get(k, 0) + 1
    order = sorted(range(n), key=lambda a: (freq[inv1[a]], a))

    def extend(f, g, a, b):
        f, g = f[:], g[:]
        f[a], g[b] = b, a
        queue = [a]
        done = [x for x in range(n) if f[x] != -1 and x != a]
        while queue:
            x = queue.pop()
            done.append(x)
            for y in done:
                for p, q in ((A[x][y], B[f[x]][f[y]]), (A[y][x], B[f[y]][f[x]])):
                    if f[p] == -1:
                        if g[q] != -1 or inv1[p] != inv2[q]:
                            return None
                        f[p], g[q] = q, p
                        queue.append(p)
                    elif f[p] != q:
                        return None
        return f, g

    def search(f, g):
        a = next((x for x in order if f[x] == -1), None)
        if a is None:
            return tuple(f)
        for b in range(n):
            if g[b] == -1 and inv1[a] == inv2[b]:
                state = extend(f, g, a, b)
                if state is not None:
                    found = search(*state)
                    if found is not None:
                        return found
        return None

    return search([-1] * n, [-1] * n)


MAX_CANONICAL_ORDER = 6


def canonical_form(t):
    """Lexicographically least relabelled table, as ``(code, table)``."""
    n = t.order
    if n > MAX_CANONICAL_ORDER:
        raise SizeError(f"canonical form by relabelling is limited to order {MAX_CANONICAL_ORDER}")
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    T = t.table
    # relabelled[p, i, j] = perm[T[inv[i], inv[j]]]
    inner = T[inv[:, :, None], inv[:, None, :]]
    relabelled = np.take_along_axis(perms, inner.reshape(len(perms), -1), axis=1)
    weights = n ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    codes = relabelled @ weights
    best = int(np.argmin(codes))
    return int(codes[best]), CayleyTable(relabelled[best].reshape(n, n))


# ---------------------------------------------------------------- enumeration

MAX_ORDER = 4
MAX_ORDER_LEFT_LEGAL = 5
LEFT_LEGAL = parse_identity("aba=ab")


def _partial_eval(T, word, assignment):
    acc = assignment[word[0]]
    for v in word[1:]:
        acc = T[acc][assignment[v]]
        if acc < 0:
            return -1
    return acc


def _identities_hold(T, identities, n):
    for ident in identities:
        variables = ident.variables
        for values in product(range(n), repeat=len(variables)):
            asg = dict(zip(variables, values))
            lhs = _partial_eval(T, ident.lhs, asg)
            if lhs < 0:
                continue
            rhs = _partial_eval(T, ident.rhs, asg)
            if rhs >= 0 and lhs != rhs:
                return False
    return True


def _consistent(T, where, i, j, n):
    """Check every newly determined associativity triple after setting ``T[i][j]``.

    ``where[v]`` lists the filled cells holding ``v``.
    """
    v = T[i][j]
    Ti, Tv, Tj = T[i], T[v], T[j]
    for k in range(n):
        # (ij)k = i(jk)
        jk = Tj[k]
        if jk >= 0:
            lhs, rhs = Tv[k], Ti[jk]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        # (ki)j = k(ij)
        ki = T[k][i]
        if ki >= 0:
            lhs, rhs = T[ki][j], T[k][v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # (ab)j = a(bj) where ab = i
    for a, b in where[i]:
        bj = T[b][j]
        if bj >= 0:
            r = T[a][bj]
            if r >= 0 and r != v:
                return False
    # i(ab) = (ia)b where ab = j
    for a, b in where[j]:
        ia = Ti[a]
        if ia >= 0:
            r = T[ia][b]
            if r >= 0 and r != v:
                return False
    return True


def _left_legal_consistent(T, where, i, j):
    """Prune with ``(ab)a = (ab)b = (ab)(ab) = ab``, all consequences of aba=ab.

    Together the two halves enforce aba=ab exactly, cell by cell.
    """
    v = T[i][j]
    Tv = T[v]
    for x in (i, j, v):
        if Tv[x] >= 0 and Tv[x] != v:
            return False
    if v != i:
        # the new cell read as (ab)x with x in {a, b, ab}
        for a, b in where[i]:
            if j == a or j == b or j == i:
                return False
    return True


def _labelled(n, identities, left_legal):
    T = [[-1] * n for _ in range(n)]
    where = [[] for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]

    def fill(c):
        if c == len(cells):
            yield [row[:] for row in T]
            return
        i, j = cells[c]
        row_done = j == n - 1
        for v in range(n):
            T[i][j] = v
            where[v].append((i, j))
            ok = (
                (not left_legal or _left_legal_consistent(T, where, i, j))
                and _consistent(T, where, i, j, n)
                and not (row_done and identities and not _identities_hold(T, identities, n))
            )
            if ok:
                yield from fill(c + 1)
            where[v].pop()
        T[i][j] = -1

    yield from fill(0)


def enumerate_semigroups(order, identities=(), left_legal=False, up_to_iso=False, limit=None):
    """All semigroups on ``order`` elements satisfying ``identities``.

    Tables are generated in lexicographic row-major order.  With
    ``up_to_iso`` each isomorphism class is represented by its canonical
    (lexicographically least) table and classes are sorted by that table.
    """
    identities = [parse_identity(i) for i in identities]
    left_legal = left_legal or LEFT_LEGAL in identities
    # aba=ab is enforced cell by cell when left_legal is set
    identities = [i for i in identities if i != LEFT_LEGAL]
    if limit is None:
        limit = MAX_ORDER_LEFT_LEGAL if left_legal else MAX_ORDER
    if order < 1:
        raise ValueError("order must be positive")
    if order > limit:
        raise SizeError(f"order {order} exceeds the enumeration bound {limit}")
    found = _labelled(order, identities, left_legal)
    if not up_to_iso:
        return [CayleyTable(rows) for rows in found]
    classes = {}
    for rows in found:
        code, canon = canonical_form(CayleyTable(rows))
        classes.setdefault(code, canon)
    return [classes[k] for k in sorted(classes)]


def census(max_order, identities=(), left_legal=False):
    """Semigroups of orders ``1..max_order`` up to isomorphism."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semigroups(n, identities, left_legal, up_to_iso=True))
    return out


# ---------------------------------------------------------------- subdirect decomposition

def square_kernel(t):
    """Kernel of ``a -> a^2``."""
    return Partition(t.squares)


def rees_congruence(t, ideal):
    ideal = sorted(ideal)
    labels = list(range(t.order))
    for x in ideal:
        labels[x] = ideal[0]
    return Partition(labels)


def subdirect_image(t, congruences):
    """Image of ``t`` in the direct product of its quotients.

    Returns ``(ambient, image)``: the product table and the indices of the
    elements ``a -> ([a]_1, [a]_2, ...)`` inside it.  The map is injective
    exactly when the congruences meet in equality.
    """
    quotients = [quotient(t, c) for c in congruences]
    ambient = reduce(direct_product, quotients)
    image = []
    for a in range(t.order):
        idx = 0
        for c, q in zip(congruences, quotients):
            blocks = c.blocks()
            k = next(i for i, b in enumerate(blocks) if a in b)
            idx = idx * q.order + k
        image.append(idx)
    return ambient, image


def lrb_zm_decomposition(t):
    """Congruences ``(ker a->a^2, Rees mod S^2)`` of a member of A."""
    subset, _ = square_ideal(t)
    return square_kernel(t), rees_congruence(t, subset)
