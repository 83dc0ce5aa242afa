"""Words, normal forms and the free left legal semigroup.

Two words over an alphabet are equal in every left legal semigroup exactly
when they have the same normal form.  A normal form is a nonempty word in
which every letter occurs once, except that the first letter may be
doubled at the head (``xxyz``).  Words are plain tuples of letter tokens.
"""

from itertools import permutations
from math import perm

from .errors import SizeError, WordError
from .finite import CayleyTable

__all__ = [
    "parse_word",
    "format_word",
    "support_sequence",
    "is_normal",
    "star",
    "normalize",
    "circ",
    "are_equivalent",
    "normal_words",
    "free_size",
    "free_semigroup",
    "MAX_FREE_LETTERS",
]

MAX_FREE_LETTERS = 4


def parse_word(text):
    """Split ``text`` into letter tokens.

    Whitespace-separated tokens are used when the text contains whitespace;
    otherwise every character is its own letter (``"xy"`` is x then y).
    """
    tokens = text.split()
    if not tokens:
        raise WordError("empty word")
    if len(tokens) == 1:
        return tuple(tokens[0])
    return tuple(tokens)


def format_word(word):
    if all(len(letter) == 1 for letter in word):
        return "".join(word)
    return " ".join(word)


def _check(word):
    word = tuple(word)
    if not word:
        raise WordError("words are nonempty")
    return word


def support_sequence(word):
    """Distinct letters of ``word`` in order of first occurrence."""
    return tuple(dict.fromkeys(_check(word)))


def is_normal(word):
    word = tuple(word)
    if not word:
        return False
    if len(word) >= 2 and word[0] == word[1]:
        word = word[1:]
    return len(set(word)) == len(word)


def star(word):
    """Drop one copy of a doubled head; duplicate-free words are returned as is."""
    word = _check(word)
    if not is_normal(word):
        raise WordError(f"not a normal form: {format_word(word)}")
    if len(word) >= 2 and word[0] == word[1]:
        return word[1:]
    return word


def normalize(word):
    word = _check(word)
    support = support_sequence(word)
    if len(word) >= 2 and word[0] == word[1]:
        return (word[0],) + support
    return support


def circ(left, right):
    """Product of two normal forms in the free left legal semigroup."""
    left, right = _check(left), _check(right)
    for w in (left, right):
        if not is_normal(w):
            raise WordError(f"not a normal form: {format_word(w)}")
    seen = set(left)
    tail = tuple(letter for letter in star(right) if letter not in seen)
    if len(left) == 1 and left[0] == right[0]:
        return (left[0], left[0]) + tail
    return left + tail


def are_equivalent(w1, w2):
    """Decide whether two words are equal in every left legal semigroup."""
    return normalize(w1) == normalize(w2)


def free_size(n):
    """Number of elements of the free left legal semigroup on ``n`` letters."""
    return 2 * sum(perm(n, k) for k in range(1, n + 1))


def normal_words(alphabet):
    """All normal forms over ``alphabet``, graded by length then alphabet order."""
    alphabet = tuple(alphabet)
    rank = {letter: i for i, letter in enumerate(alphabet)}
    words = []
    for k in range(1, len(alphabet) + 1):
        for p in permutations(alphabet, k):
            words.append(p)
            words.append((p[0],) + p)
    words.sort(key=lambda w: (len(w), [rank[c] for c in w]))
    return words


def free_semigroup(alphabet, max_letters=MAX_FREE_LETTERS):
    """Enumerate the free left legal semigroup on ``alphabet``.

    Returns ``(elements, table)`` where ``elements`` lists the normal forms in
    graded order and ``table`` is their Cayley table under :func:`circ`.
    """
    alphabet = tuple(alphabet)
    if not alphabet:
        raise WordError("alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise WordError("alphabet letters must be distinct")
    if len(alphabet) > max_letters:
        raise SizeError(
            f"{len(alphabet)} letters give {free_size(len(alphabet))} elements; "
            f"limit is {max_letters} letters ({free_size(max_letters)} elements)"
        )
    elements = normal_words(alphabet)
    index = {w: i for i, w in enumerate(elements)}
    rows = [[index[circ(a, b)] for b in elements] for a in elements]
    # element names cannot contain whitespace
    names = [format_word(w).replace(" ", ".") for w in elements]
    return elements, CayleyTable(rows, names)
