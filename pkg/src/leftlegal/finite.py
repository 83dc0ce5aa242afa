"""Finite semigroups given by Cayley tables.

A :class:`CayleyTable` stores an ``n x n`` integer array whose entry
``[a, b]`` is the index of the product ``a*b``, together with element
names.  Everything here is exhaustive and vectorised with numpy, which is
plenty for the desk-scale orders this package works with.
"""

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotAssociativeError, ParseError, PreconditionError, SizeError, TableError

__all__ = [
    "CayleyTable",
    "Identity",
    "Partition",
    "parse_identity",
    "parse_cayley",
    "read_cayley",
    "format_cayley",
    "is_associative",
    "associativity_violation",
    "require_associative",
    "satisfies_identity",
    "identity_counterexample",
    "basic_predicates",
    "is_zero_semigroup",
    "is_ideal",
    "square_ideal",
    "rees_quotient",
    "direct_product",
    "identity_element",
    "adjoin_identity",
    "power",
    "congruence_witness",
    "is_congruence",
    "quotient",
    "left_zero",
    "zero_semigroup",
    "chain_semilattice",
    "trivial",
]


class CayleyTable:
    """An immutable finite magma."""

    __slots__ = ("_table", "_names", "_index", "__dict__")

    def __init__(self, table, names=None):
        arr = np.array(table, dtype=np.intp)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise TableError(f"table must be a nonempty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise TableError(f"entry at row {bad[0]}, column {bad[1]} is out of range [0, {n})")
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise TableError(f"{len(names)} names for a table of order {n}")
        if len(set(names)) != n:
            raise TableError("element names must be distinct")
        for x in names:
            if not x or any(ch.isspace() for ch in x):
                raise TableError(f"bad element name {x!r}")
        arr.flags.writeable = False
        self._table = arr
        self._names = names
        self._index = {x: i for i, x in enumerate(names)}

    @property
    def table(self):
        return self._table

    @property
    def names(self):
        return self._names

    @property
    def order(self):
        return self._table.shape[0]

    def __len__(self):
        return self.order

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def indices(self, names):
        return [self.index(x) for x in names]

    def mul(self, a, b):
        return int(self._table[a, b])

    def product(self, *elements):
        """Left-to-right product of element indices."""
        acc = elements[0]
        for x in elements[1:]:
            acc = self._table[acc, x]
        return int(acc)

    def by_name(self, a, b):
        return self._names[self._table[self._index[a], self._index[b]]]

    def subtable(self, elements):
        """Restriction to a subset closed under multiplication."""
        elements = sorted(set(int(e) for e in elements))
        if not elements:
            raise TableError("empty subset")
        pos = np.full(self.order, -1, dtype=np.intp)
        pos[elements] = np.arange(len(elements))
        sub = pos[self._table[np.ix_(elements, elements)]]
        if (sub < 0).any():
            raise TableError("subset is not closed under multiplication")
        return CayleyTable(sub, [self._names[e] for e in elements])

    def transpose(self):
        """The opposite magma, with ``a*b`` read as ``b*a``."""
        return CayleyTable(self._table.T, self._names)

    def relabel(self, permutation):
        """Table with element ``i`` moved to position ``permutation[i]``."""
        p = np.asarray(permutation, dtype=np.intp)
        inv = np.argsort(p)
        names = [self._names[i] for i in inv]
        return CayleyTable(p[self._table[np.ix_(inv, inv)]], names)

    @cached_property
    def squares(self):
        return np.diagonal(self._table).copy()

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self._names == other._names and np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash((self._names, self._table.tobytes()))

    def __repr__(self):
        return f"CayleyTable(order={self.order}, names={list(self._names)})"

    def __str__(self):
        return format_cayley(self)


# ---------------------------------------------------------------- file format

def parse_cayley(text):
    """Parse the text Cayley format.

    Layout: an optional ``elements: n1 n2 ...`` line, a line with the order
    ``n``, then ``n`` rows of ``n`` 0-based indices.  Blank lines and lines
    starting with ``#`` are ignored.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty table file")
    names = None
    no, line = lines[0]
    if line.startswith("elements:"):
        names = line[len("elements:"):].split()
        lines = lines[1:]
        if not lines:
            raise ParseError("missing order line", no)
        no, line = lines[0]
    try:
        n = int(line)
    except ValueError:
        raise ParseError(f"expected the table order, got {line!r}", no) from None
    if n <= 0:
        raise ParseError("order must be positive", no)
    if names is not None and len(names) != n:
        raise ParseError(f"{len(names)} element names for order {n}", no)
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else no
        raise ParseError(f"expected {n} table rows, found {len(rows)}", last)
    table = []
    for no, line in rows:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", no) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", no)
        bad = [v for v in row if not 0 <= v < n]
        if bad:
            raise ParseError(f"entry {bad[0]} out of range [0, {n})", no)
        table.append(row)
    try:
        return CayleyTable(table, names)
    except TableError as exc:
        raise ParseError(str(exc)) from None


def read_cayley(path):
    with open(path, encoding="utf-8") as fh:
        return parse_cayley(fh.read())


def format_cayley(t):
    width = len(str(t.order - 1))
    lines = ["elements: " + " ".join(t.names), str(t.order)]
    for row in t.table:
        lines.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- associativity

def associativity_violation(t):
    """First triple ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
    T = t.table
    left = T[T, :]  # [a, b, c] -> (ab)c
    right = T[:, T]  # [a, b, c] -> a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        return tuple(int(i) for i in bad[0])
    return None


def is_associative(t):
    return associativity_violation(t) is None


def require_associative(t):
    triple = associativity_violation(t)
    if triple is not None:
        raise NotAssociativeError(t, triple)
    return t


# ---------------------------------------------------------------- identities

_IDENTITY_RE = re.compile(r"^([a-z]+)=([a-z]+)$")

# refuse n ** k blowups beyond desk scale
MAX_FREE_VARIABLES = 4
MAX_ORDER_FOR_MANY_VARIABLES = 32


@dataclass(frozen=True)
class Identity:
    """An equation between two words in the variables ``a``..``z``."""

    lhs: str
    rhs: str

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            if not side or not re.fullmatch(r"[a-z]+", side):
                raise ValueError(f"bad identity side {side!r}")

    @property
    def variables(self):
        return tuple(dict.fromkeys(self.lhs + self.rhs))

    def __str__(self):
        return f"{self.lhs}={self.rhs}"


def parse_identity(text):
    if isinstance(text, Identity):
        return text
    m = _IDENTITY_RE.match("".join(text.split()))
    if not m:
        raise ValueError(f"cannot parse identity {text!r}; expected e.g. 'aba=ab'")
    return Identity(m.group(1), m.group(2))


def _evaluate_all(t, identity):
    variables = identity.variables
    k, n = len(variables), t.order
    if k > MAX_FREE_VARIABLES and n > MAX_ORDER_FOR_MANY_VARIABLES:
        raise SizeError(f"{k} variables on order {n} is beyond the exhaustive bound")
    grid = np.indices((n,) * k).reshape(k, -1)
    slot = {v: i for i, v in enumerate(variables)}
    T = t.table

    def ev(word):
        vals = grid[slot[word[0]]]
        for v in word[1:]:
            vals = T[vals, grid[slot[v]]]
        return vals

    return grid, ev(identity.lhs), ev(identity.rhs)


def identity_counterexample(t, identity):
    """A violating assignment ``{variable: element name}``, or None."""
    identity = parse_identity(identity)
    grid, lhs, rhs = _evaluate_all(t, identity)
    bad = np.flatnonzero(lhs != rhs)
    if not len(bad):
        return None
    col = grid[:, bad[0]]
    return {v: t.names[col[i]] for i, v in enumerate(identity.variables)}


def satisfies_identity(t, identity):
    identity = parse_identity(identity)
    _, lhs, rhs = _evaluate_all(t, identity)
    return bool(np.array_equal(lhs, rhs))


def is_zero_semigroup(t):
    """True when every product is one and the same element."""
    return bool((t.table == t.table[0, 0]).all())


def basic_predicates(t):
    sat = lambda s: satisfies_identity(t, s)  # noqa: E731
    band = sat("aa=a")
    left_legal = sat("aba=ab")
    commutative = sat("ab=ba")
    return {
        "is_band": band,
        "is_left_zero": sat("ab=a"),
        "is_zero_semigroup": is_zero_semigroup(t),
        "is_semilattice": band and commutative,
        "is_left_regular_band": band and left_legal,
        "is_left_normal_band": band and sat("abc=acb"),
        "is_left_legal": left_legal,
        "is_commutative": commutative,
    }


# ---------------------------------------------------------------- ideals and constructions

def power(t, a, k):
    acc = a
    for _ in range(k - 1):
        acc = t.table[acc, a]
    return int(acc)


def is_ideal(t, subset):
    subset = set(int(x) for x in subset)
    if not subset:
        return False
    members = sorted(subset)
    products = np.concatenate([t.table[members, :].ravel(), t.table[:, members].ravel()])
    return set(products.tolist()) <= subset


def square_ideal(t):
    """``S^2 = {ab}`` as a sorted index list, with its subtable."""
    subset = sorted(set(t.table.ravel().tolist()))
    return subset, t.subtable(subset)


def _fresh(name, taken):
    while name in taken:
        name += "'"
    return name


def rees_quotient(t, ideal):
    """Collapse ``ideal`` to a single zero element named ``0``."""
    ideal = sorted(set(int(x) for x in ideal))
    if not ideal:
        raise PreconditionError("ideal must be nonempty")
    inside = np.zeros(t.order, dtype=bool)
    inside[ideal] = True
    for a in ideal:
        for s in range(t.order):
            for p in (t.table[s, a], t.table[a, s]):
                if not inside[p]:
                    first, second = (s, a) if p == t.table[s, a] else (a, s)
                    raise PreconditionError(
                        f"not an ideal: {t.names[first]}*{t.names[second]} = {t.names[p]} lies outside"
                    )
    outside = [i for i in range(t.order) if not inside[i]]
    zero = len(outside)
    new = np.full(t.order, zero, dtype=np.intp)
    new[outside] = np.arange(zero)
    names = [t.names[i] for i in outside]
    names.append(_fresh("0", set(names)))
    rows = np.full((zero + 1, zero + 1), zero, dtype=np.intp)
    if outside:
        rows[:zero, :zero] = new[t.table[np.ix_(outside, outside)]]
    return CayleyTable(rows, names)


def direct_product(t1, t2):
    n1, n2 = t1.order, t2.order
    a = np.arange(n1 * n2)
    i, j = a // n2, a % n2
    rows = t1.table[i[:, None], i[None, :]] * n2 + t2.table[j[:, None], j[None, :]]
    names = [f"({x},{y})" for x in t1.names for y in t2.names]
    return CayleyTable(rows, names)


def identity_element(t):
    ids = np.arange(t.order)
    for e in range(t.order):
        if np.array_equal(t.table[e], ids) and np.array_equal(t.table[:, e], ids):
            return e
    return None


def adjoin_identity(t):
    """``S^1``: ``t`` itself if it has an identity, else ``t`` with a new identity ``1``."""
    if identity_element(t) is not None:
        return t
    n = t.order
    rows = np.empty((n + 1, n + 1), dtype=np.intp)
    rows[:n, :n] = t.table
    rows[n, :] = np.arange(n + 1)
    rows[:, n] = np.arange(n + 1)
    return CayleyTable(rows, list(t.names) + [_fresh("1", set(t.names))])


# ---------------------------------------------------------------- partitions

class Partition:
    """A partition of ``range(n)``, stored as canonical labels.

    ``labels[i]`` is the least element of the block containing ``i``.
    """

    __slots__ = ("labels",)

    def __init__(self, labels):
        labels = [int(x) for x in labels]
        first = {}
        self.labels = tuple(first.setdefault(x, i) for i, x in enumerate(labels))

    @classmethod
    def from_blocks(cls, blocks, n):
        labels = [-1] * n
        for k, block in enumerate(blocks):
            for x in block:
                if labels[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                labels[x] = k
        if -1 in labels:
            raise ValueError("blocks do not cover the set")
        return cls(labels)

    @classmethod
    def from_relation(cls, related):
        """Partition from a boolean ``n x n`` matrix that must be an equivalence."""
        related = np.asarray(related, dtype=bool)
        n = related.shape[0]
        labels = [int(np.flatnonzero(related[i])[0]) for i in range(n)]
        p = cls(labels)
        if not np.array_equal(p.matrix(), related):
            raise ValueError("relation is not an equivalence")
        return p

    @classmethod
    def discrete(cls, n):
        return cls(range(n))

    @classmethod
    def universal(cls, n):
        return cls([0] * n)

    def __len__(self):
        return len(self.labels)

    @property
    def n_blocks(self):
        return len(set(self.labels))

    def blocks(self):
        out = {}
        for i, x in enumerate(self.labels):
            out.setdefault(x, []).append(i)
        return [tuple(b) for b in out.values()]

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def matrix(self):
        lab = np.array(self.labels)
        return lab[:, None] == lab[None, :]

    def is_discrete(self):
        return self.n_blocks == len(self)

    def is_universal(self):
        return self.n_blocks == 1

    def meet(self, other):
        return Partition(_pair_labels(self, other))

    def join(self, other):
        parent = list(range(len(self)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (self, other):
            for i, x in enumerate(p.labels):
                ra, rb = find(i), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return Partition([find(i) for i in range(len(self))])

    def refines(self, other):
        """True when every block of ``self`` lies inside a block of ``other``."""
        return all(other.labels[i] == other.labels[x] for i, x in enumerate(self.labels))

    def format(self, names):
        return " ".join("{" + " ".join(names[i] for i in b) + "}" for b in self.blocks())

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Partition({[list(b) for b in self.blocks()]})"


def _pair_labels(p, q):
    seen = {}
    return [seen.setdefault(pair, i) for i, pair in enumerate(zip(p.labels, q.labels))]


def congruence_witness(t, p):
    """``(a, b, c, side)`` with ``a ~ b`` but ``ac !~ bc`` (side "right") or
    ``ca !~ cb`` (side "left"); None if ``p`` is a congruence."""
    lab = np.array(p.labels)
    T = t.table
    for a in range(t.order):
        r = lab[a]
        if r == a:
            continue
        bad = np.flatnonzero(lab[T[a, :]] != lab[T[r, :]])
        if len(bad):
            return (int(r), a, int(bad[0]), "right")
        bad = np.flatnonzero(lab[T[:, a]] != lab[T[:, r]])
        if len(bad):
            return (int(r), a, int(bad[0]), "left")
    return None


def is_congruence(t, p):
    return congruence_witness(t, p) is None


def quotient(t, p):
    """Factor semigroup by a congruence; classes are named like ``{x,e,f}``."""
    if not is_congruence(t, p):
        raise PreconditionError("partition is not a congruence")
    blocks = p.blocks()
    reps = [b[0] for b in blocks]
    pos = {rep: k for k, rep in enumerate(reps)}
    lab = p.labels
    rows = [[pos[lab[t.table[a, b]]] for b in reps] for a in reps]
    names = ["{" + ",".join(t.names[i] for i in b) + "}" for b in blocks]
    return CayleyTable(rows, names)


# ---------------------------------------------------------------- small standard semigroups

def left_zero(n, names=None):
    return CayleyTable(np.repeat(np.arange(n)[:, None], n, axis=1), names)


def zero_semigroup(n, names=None):
    if names is None:
        names = ["0"] + [f"z{i}" for i in range(1, n)]
    return CayleyTable(np.zeros((n, n), dtype=np.intp), names)


def chain_semilattice(n, names=None):
    """The chain ``0 < 1 < ... < n-1`` under meet."""
    a = np.arange(n)
    return CayleyTable(np.minimum(a[:, None], a[None, :]), names)


def trivial(name="e"):
    return CayleyTable([[0]], [name])
