"""Structure theory of finite left legal semigroups.

Relations computed here quantify over "some positive power" of an element.
In a semigroup of order ``n`` the powers of an element repeat within ``n``
steps, so searching exponents ``1..n+1`` is exhaustive.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError
from .finite import (
    Partition,
    adjoin_identity,
    basic_predicates,
    congruence_witness,
    identity_counterexample,
    quotient,
    require_associative,
    satisfies_identity,
    square_ideal,
)

__all__ = [
    "EquivalenceReport",
    "RetractVerdict",
    "ClauseResult",
    "AuditReport",
    "powers",
    "tau_relation",
    "tau_shortcut",
    "sigma_relation",
    "eta_relation",
    "semilattice_components",
    "square_retract_check",
    "is_putcha",
    "putcha_witness",
    "separativity",
    "theorem_audit",
]


@dataclass(frozen=True)
class EquivalenceReport:
    relation: Partition
    is_congruence: bool
    witness: tuple = None
    quotient_is_semilattice: bool = None


def powers(t, top=None):
    """Array ``P`` with ``P[k, a] = a^k`` for ``k = 1..top`` (row 0 unused)."""
    n = t.order
    top = n + 2 if top is None else top
    P = np.empty((top + 1, n), dtype=np.intp)
    P[0] = -1
    P[1] = np.arange(n)
    for k in range(2, top + 1):
        P[k] = t.table[P[k - 1], P[1]]
    return P


def _report(t, p, semilattice_check=False):
    witness = congruence_witness(t, p)
    quo = None
    if semilattice_check and witness is None:
        quo = basic_predicates(quotient(t, p))["is_semilattice"]
    return EquivalenceReport(p, witness is None, witness, quo)


def tau_relation(t, dual=False):
    """``a ~ b`` iff ``a^k b = a^(k+1)`` and ``b^k a = b^(k+1)`` for some ``k``.

    With ``dual=True`` products are read right to left, which gives sigma.
    """
    require_associative(t)
    s = t.transpose() if dual else t
    n, T = s.order, s.table
    P = powers(s)
    related = np.zeros((n, n), dtype=bool)
    for k in range(1, n + 2):
        # absorbs[a, b]: a^k b == a^(k+1)
        absorbs = T[P[k]] == P[k + 1][:, None]
        related |= absorbs & absorbs.T
    return _report(t, Partition.from_relation(related))


def sigma_relation(t):
    return tau_relation(t, dual=True)


def tau_shortcut(t):
    """The exponent-2 form ``a^2 b = a^2`` and ``b^2 a = b^2``."""
    sq = t.squares
    absorbs = t.table[sq, :] == sq[:, None]
    return Partition.from_relation(absorbs & absorbs.T)


def _require_left_legal(t, what):
    require_associative(t)
    bad = identity_counterexample(t, "aba=ab")
    if bad is not None:
        raise PreconditionError(
            f"{what} needs a left legal semigroup; aba != ab at a={bad['a']}, b={bad['b']}"
        )


def eta_relation(t):
    """Least semilattice congruence of a left legal semigroup.

    ``a ~ b`` iff some power ``a^k`` lies in ``SbS`` and ``b^k`` lies in ``SaS``.
    """
    _require_left_legal(t, "eta_relation")
    n, T = t.order, t.table
    # in_ideal[x, b]: x in SbS
    in_ideal = np.zeros((n, n), dtype=bool)
    for b in range(n):
        in_ideal[T[T[:, b], :].ravel(), b] = True
    P = powers(t)
    related = np.zeros((n, n), dtype=bool)
    for k in range(1, n + 2):
        hit = in_ideal[P[k], :]  # hit[a, b]: a^k in SbS
        related |= hit & hit.T
    return _report(t, Partition.from_relation(related), semilattice_check=True)


def semilattice_components(t):
    """Lift the left zero classes ``L_i`` of ``S^2`` to ``S_i = {a : a^2 in L_i}``."""
    _require_left_legal(t, "semilattice_components")
    subset, _ = square_ideal(t)
    T = t.table
    e = np.array(subset)
    sub = T[np.ix_(e, e)]
    # e ~ f iff ef = e and fe = f
    related = (sub == e[:, None]) & (sub.T == e[None, :])
    classes = Partition.from_relation(related)
    cls_of = dict(zip(subset, (subset[i] for i in classes.labels)))
    return Partition([cls_of[int(x)] for x in t.squares])


@dataclass(frozen=True)
class RetractVerdict:
    is_onto: bool
    fixes_ideal: bool
    is_homomorphism: bool
    witness: tuple = None

    @property
    def is_retract(self):
        return self.is_onto and self.fixes_ideal and self.is_homomorphism


def square_retract_check(t):
    """Test whether ``a -> a^2`` is a retract homomorphism of ``S`` onto ``S^2``.

    Any retraction onto a band ideal ``S^2`` must send ``a`` to ``a^2``, so this
    map decides whether ``S^2`` is a retract ideal at all in that case.
    """
    require_associative(t)
    T, sq = t.table, t.squares
    subset, _ = square_ideal(t)
    onto = set(sq.tolist()) == set(subset)
    fixes = bool((sq[subset] == subset).all())
    bad = np.argwhere(sq[T] != T[sq[:, None], sq[None, :]])
    witness = tuple(int(i) for i in bad[0]) if len(bad) else None
    return RetractVerdict(onto, fixes, witness is None, witness)


def _principal_ideals(t1):
    """``member[x, b]``: ``x in S1 b S1`` for a monoid table ``t1``."""
    n1, T = t1.order, t1.table
    member = np.zeros((n1, n1), dtype=bool)
    for b in range(n1):
        member[T[T[:, b], :].ravel(), b] = True
    return member


def putcha_witness(t):
    """A pair ``(a, b)`` with ``a in S1 b S1`` but no power of ``a`` in ``S1 b^2 S1``."""
    require_associative(t)
    n = t.order
    member = _principal_ideals(adjoin_identity(t))[:n, :n]
    P = powers(t)
    sq = t.squares
    reaches = np.zeros((n, n), dtype=bool)
    for m in range(1, n + 2):
        reaches |= member[P[m][:, None], sq[None, :]]
    bad = np.argwhere(member & ~reaches)
    if len(bad):
        return tuple(int(i) for i in bad[0])
    return None


def is_putcha(t):
    return putcha_witness(t) is None


def separativity(t):
    require_associative(t)
    T, sq = t.table, t.squares
    off = ~np.eye(t.order, dtype=bool)
    b_sq, a_sq = sq[None, :], sq[:, None]
    right = (T == b_sq) & (T.T == a_sq) & off  # ab = b^2, ba = a^2
    left = (T == a_sq) & (T.T == b_sq) & off  # ab = a^2, ba = b^2
    weak = (a_sq == T) & (T == b_sq) & off  # a^2 = ab = b^2
    return {
        "right_separative": not right.any(),
        "left_separative": not left.any(),
        "weakly_separative": not weak.any(),
    }


# ---------------------------------------------------------------- audit

PASS, VACUOUS, FAIL = "pass", "vacuous-pass", "fail"


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    statement: str
    status: str
    values: dict = field(default_factory=dict)
    witness: str = None

    def line(self):
        vals = ", ".join(f"{k}: {str(v).lower()}" for k, v in self.values.items())
        text = f"({self.clause}) {self.status}: {self.statement}"
        if vals:
            text += f" [{vals}]"
        if self.witness:
            text += f" witness: {self.witness}"
        return text


@dataclass(frozen=True)
class AuditReport:
    clauses: tuple

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.clauses)

    def __getitem__(self, clause):
        for c in self.clauses:
            if c.clause == clause:
                return c
        raise KeyError(clause)

    def to_text(self):
        return "\n".join(c.line() for c in self.clauses) + "\n"


def _equivalence(clause, statement, lhs_name, lhs, rhs_name, rhs):
    status = FAIL if lhs != rhs else (PASS if lhs else VACUOUS)
    return ClauseResult(clause, statement, status, {lhs_name: lhs, rhs_name: rhs})


def _implication(clause, statement, antecedent, values, consequent, witness=None):
    if not antecedent:
        status = VACUOUS
    else:
        status = PASS if consequent else FAIL
    return ClauseResult(clause, statement, status, values, None if status != FAIL else witness)


def theorem_audit(t):
    """Cross-check the structure theorems for left legal semigroups on ``t``."""
    require_associative(t)
    names = t.names
    preds = basic_predicates(t)
    ll = preds["is_left_legal"]
    _, sub = square_ideal(t)
    sub_preds = basic_predicates(sub)
    retract = square_retract_check(t).is_retract
    sat = lambda s: satisfies_identity(t, s)  # noqa: E731
    out = []

    out.append(_equivalence(
        "a", "left legal and ab=a^2b <=> a->a^2 retracts onto the left regular band S^2",
        "left_legal_ab=aab", ll and sat("ab=aab"),
        "retract_onto_lrb", retract and sub_preds["is_left_regular_band"],
    ))
    out.append(_equivalence(
        "b", "ab=ac <=> a->a^2 retracts onto the left zero semigroup S^2",
        "ab=ac", sat("ab=ac"),
        "retract_onto_lz", retract and sub_preds["is_left_zero"],
    ))

    if ll:
        eta = eta_relation(t)
        tau = tau_relation(t)
        comps = semilattice_components(t)
    vals = {"left_legal": ll}
    if ll:
        conds = (eta.relation.is_universal(), sat("aab=aa"), sub_preds["is_left_zero"])
        vals.update(zip(("eta_universal", "aab=aa", "s2_left_zero"), conds))
    out.append(_implication(
        "c", "left legal => (eta universal <=> a^2b=a^2 <=> S^2 left zero)",
        ll, vals, ll and len(set(conds)) == 1,
    ))

    vals = {"left_legal": ll}
    witness = None
    if ll:
        agree = tau.relation == eta.relation == comps
        vals.update(tau_eq_eta=tau.relation == eta.relation, eta_eq_components=eta.relation == comps,
                    eta_congruence=eta.is_congruence,
                    eta_quotient_semilattice=bool(eta.quotient_is_semilattice))
        witness = f"tau {tau.relation.format(names)}; eta {eta.relation.format(names)}"
    out.append(_implication(
        "d", "left legal => tau = eta = components, a semilattice congruence",
        ll, vals, ll and agree and eta.is_congruence and eta.quotient_is_semilattice, witness,
    ))

    sep = separativity(t)
    out.append(_implication(
        "e", "left legal => (right separative <=> weakly separative)",
        ll, {"left_legal": ll, "right_separative": sep["right_separative"],
             "weakly_separative": sep["weakly_separative"]},
        sep["right_separative"] == sep["weakly_separative"],
    ))
    out.append(_implication(
        "f", "left legal and left separative => commutative",
        ll and sep["left_separative"],
        {"left_legal": ll, "left_separative": sep["left_separative"],
         "commutative": preds["is_commutative"]},
        preds["is_commutative"],
    ))

    pw = putcha_witness(t)
    out.append(_implication(
        "g", "left legal => Putcha",
        ll, {"left_legal": ll, "putcha": pw is None}, pw is None,
        pw and f"a={names[pw[0]]}, b={names[pw[1]]}",
    ))

    vals = {"left_legal": ll}
    if ll:
        vals.update({"s2_idempotent": sub_preds["is_band"], "aaa=aa": sat("aaa=aa"), "ab=abb": sat("ab=abb")})
    out.append(_implication(
        "h", "left legal => S^2 idempotent, a^3=a^2, ab=ab^2",
        ll, vals, all(vals.values()),
    ))
    return AuditReport(tuple(out))

