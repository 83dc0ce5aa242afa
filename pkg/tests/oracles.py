"""Deliberately naive reference computations used only by the tests.

None of these share code paths with the package beyond the CayleyTable
container itself.
"""

from functools import lru_cache
from itertools import permutations, product


# ---------------------------------------------------------------- words

def reductions(word):
    """All words obtained by one length-reducing application of
    ``uvu -> uv``, ``uuu -> uu`` or ``uvv -> uv`` to a factor of ``word``."""
    n = len(word)
    out = set()
    for i in range(n):
        for a in range(1, n - i + 1):
            u = word[i:i + a]
            # uuu -> uu
            if word[i + a:i + 2 * a] == u and word[i + 2 * a:i + 3 * a] == u:
                out.add(word[:i + 2 * a] + word[i + 3 * a:])
            for b in range(1, n - i - a + 1):
                v = word[i + a:i + a + b]
                # uvu -> uv
                if word[i + a + b:i + 2 * a + b] == u:
                    out.add(word[:i + a + b] + word[i + 2 * a + b:])
                # uvv -> uv
                if word[i + a + b:i + a + 2 * b] == v:
                    out.add(word[:i + a + b] + word[i + a + 2 * b:])
    return out


@lru_cache(maxsize=None)
def rewrite_classes(alphabet, max_len):
    """Connected components of all words up to ``max_len`` under the
    identities applied in both directions (every step stays within the bound).

    Returns a dict word -> frozenset of its component.
    """
    words = [w for k in range(1, max_len + 1) for w in product(alphabet, repeat=k)]
    parent = {w: w for w in words}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in words:
        for r in reductions(w):
            ra, rb = find(w), find(r)
            if ra != rb:
                parent[ra] = rb
    comps = {}
    for w in words:
        comps.setdefault(find(w), set()).add(w)
    frozen = {root: frozenset(c) for root, c in comps.items()}
    return {w: frozen[find(w)] for w in words}


def shortest_in_class(word, alphabet="xyz", max_len=8):
    comp = rewrite_classes(tuple(alphabet), max_len)[tuple(word)]
    m = min(len(w) for w in comp)
    return {w for w in comp if len(w) == m}


def reduce_to_irreducible(word):
    """Irreducible words reachable from ``word`` by length-reducing steps."""
    seen, stack, out = {word}, [word], set()
    while stack:
        w = stack.pop()
        nxt = reductions(w)
        if not nxt:
            out.add(w)
        for r in nxt - seen:
            seen.add(r)
            stack.append(r)
    return out


# ---------------------------------------------------------------- tables

def mul(T, *xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = T[acc][x]
    return acc


def holds(T, lhs, rhs):
    """Identity check by explicit loops over assignments."""
    variables = sorted(set(lhs + rhs))
    n = len(T)
    for values in product(range(n), repeat=len(variables)):
        env = dict(zip(variables, values))
        if mul(T, *[env[c] for c in lhs]) != mul(T, *[env[c] for c in rhs]):
            return False
    return True


def associative(T):
    n = len(T)
    return all(T[T[a][b]][c] == T[a][T[b][c]] for a in range(n) for b in range(n) for c in range(n))


def all_magmas(n):
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def iso_by_permutation(T1, T2):
    n = len(T1)
    if len(T2) != n:
        return False
    for p in permutations(range(n)):
        if all(p[T1[a][b]] == T2[p[a]][p[b]] for a in range(n) for b in range(n)):
            return True
    return False


def dedup_by_permutation(tables):
    reps = []
    for T in tables:
        if not any(iso_by_permutation(T, R) for R in reps):
            reps.append(T)
    return reps


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def naive_congruences(T):
    """Every set partition compatible with multiplication, as frozensets of blocks."""
    n = len(T)
    out = set()
    for part in set_partitions(range(n)):
        block = {x: i for i, b in enumerate(part) for x in b}
        ok = all(
            block[T[a][c]] == block[T[b][c]] and block[T[c][a]] == block[T[c][b]]
            for a in range(n) for b in range(n) if block[a] == block[b]
            for c in range(n)
        )
        if ok:
            out.add(frozenset(frozenset(b) for b in part))
    return out


def blocks_of(partition):
    return frozenset(frozenset(b) for b in partition.blocks())
