import numpy as np
import pytest

from leftlegal.congruences import enumerate_congruences
from leftlegal.errors import SizeError
from leftlegal.finite import (
    CayleyTable,
    basic_predicates,
    chain_semilattice,
    direct_product,
    left_zero,
    quotient,
    satisfies_identity,
    trivial,
    zero_semigroup,
)
from leftlegal.varieties import (
    DIAGRAM_EDGES,
    MEETS,
    NODES,
    VARIETIES,
    are_isomorphic,
    canonical_form,
    enumerate_semigroups,
    is_upward_closed,
    lrb_zm_decomposition,
    subdirect_image,
    variety_membership,
)
from oracles import all_magmas, associative, dedup_by_permutation, holds, iso_by_permutation


def test_nodes_and_edges():
    assert set(NODES) == {"T", "LZ", "ZM", "SL", "B", "D", "LNB", "C", "LRB", "A", "LLS"}
    assert all(lo in VARIETIES and hi in VARIETIES for lo, hi in DIAGRAM_EDGES)
    assert len(DIAGRAM_EDGES) == 17


@pytest.mark.parametrize("fixture, expected", [
    ("table4", {"B", "C", "A", "LLS"}),
    ("table3", {"A", "LLS"}),
    ("table5", {"LLS"}),
    ("SL2", {"SL", "LNB", "LRB", "D", "C", "A", "LLS"}),
    ("LZ2", {"LZ", "B", "LNB", "C", "LRB", "A", "LLS"}),
    ("ZM2", {"ZM", "B", "D", "C", "A", "LLS"}),
    ("T", set(NODES)),
])
def test_membership_examples(small_tables, fixture, expected):
    assert set(variety_membership(small_tables[fixture])) == expected


def test_non_left_legal_in_no_node():
    right_zero = CayleyTable([[0, 1], [0, 1]])
    assert variety_membership(right_zero) == ()


def test_membership_matches_loop_oracle(census4):
    for t in census4:
        rows = t.table.tolist()
        for name, v in VARIETIES.items():
            want = all(holds(rows, i.lhs, i.rhs) for i in v.identities)
            if v.zero_constant:
                want = want and len({x for r in rows for x in r}) == 1
            if v.trivial:
                want = want and t.order == 1
            assert v.contains(t) == want, name


def test_upward_closed_and_meets(census4, ll_census5):
    for t in list(census4) + list(ll_census5):
        members = set(variety_membership(t))
        assert is_upward_closed(members)
        for left, right, meet in MEETS:
            assert (left in members and right in members) == (meet in members)


def test_every_edge_is_strict(census4):
    # each inclusion in the diagram is witnessed as proper by a small table
    for lo, hi in DIAGRAM_EDGES:
        assert any(VARIETIES[hi].contains(t) and not VARIETIES[lo].contains(t) for t in census4), (lo, hi)


def test_is_upward_closed_rejects_gaps():
    assert not is_upward_closed({"LZ"})
    assert is_upward_closed(set())


def random_relabel(t, rng):
    return t.relabel(list(rng.permutation(t.order)))


def test_isomorphism_relation(small_tables):
    rng = np.random.default_rng(7)
    for t in small_tables.values():
        u = random_relabel(t, rng)
        w = random_relabel(u, rng)
        f = are_isomorphic(t, u)
        assert f is not None and sorted(f) == list(range(t.order))
        for a in range(t.order):
            for b in range(t.order):
                assert f[t.mul(a, b)] == u.mul(f[a], f[b])
        assert are_isomorphic(u, t) is not None
        assert are_isomorphic(t, t) is not None
        assert are_isomorphic(t, w) is not None


def test_non_isomorphic_pairs():
    assert are_isomorphic(left_zero(2), zero_semigroup(2)) is None
    assert are_isomorphic(left_zero(2), left_zero(3)) is None
    assert are_isomorphic(left_zero(2), left_zero(2).transpose()) is None


def test_census_reps_pairwise_distinct(census4):
    by_order = {}
    for t in census4:
        by_order.setdefault(t.order, []).append(t)
    for n, reps in by_order.items():
        if n > 3:
            continue
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert are_isomorphic(a, b) is None
                assert not iso_by_permutation(a.table.tolist(), b.table.tolist())


def test_census_reps_pairwise_distinct_order4(census4):
    reps = [t for t in census4 if t.order == 4]
    codes = {canonical_form(t)[0] for t in reps}
    assert len(codes) == len(reps) == 188
    for i, a in enumerate(reps[:40]):
        for b in reps[i + 1:]:
            assert are_isomorphic(a, b) is None


def test_canonical_form_is_relabelling_invariant(small_tables):
    rng = np.random.default_rng(11)
    for t in small_tables.values():
        if t.order > 6:
            continue
        code, canon = canonical_form(t)
        assert canonical_form(random_relabel(t, rng))[0] == code
        assert are_isomorphic(t, canon) is not None
    with pytest.raises(SizeError):
        canonical_form(left_zero(7))


def test_enumerate_order_one():
    assert [t.table.tolist() for t in enumerate_semigroups(1)] == [[[0]]]


def brute_force(n, left_legal=False):
    out = [T for T in all_magmas(n) if associative(T)]
    if left_legal:
        out = [T for T in out if holds(T, "aba", "ab")]
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_enumeration_matches_brute_force(n):
    for ll in (False, True):
        want = brute_force(n, ll)
        got = enumerate_semigroups(n, left_legal=ll)
        assert [t.table.tolist() for t in got] == sorted(want)
        iso = enumerate_semigroups(n, left_legal=ll, up_to_iso=True)
        assert len(iso) == len(dedup_by_permutation(want))


def test_order_two_counts():
    assert len(dedup_by_permutation(brute_force(2))) == 5
    assert len(dedup_by_permutation(brute_force(2, True))) == 3
    assert len(enumerate_semigroups(2, up_to_iso=True)) == 5
    assert len(enumerate_semigroups(2, left_legal=True, up_to_iso=True)) == 3
    # the two non-left-legal ones: the group of order two and the right zero semigroup
    names = {t.table.tobytes() for t in enumerate_semigroups(2, left_legal=True, up_to_iso=True)}
    dropped = [t for t in enumerate_semigroups(2, up_to_iso=True) if t.table.tobytes() not in names]
    assert len(dropped) == 2
    assert any(basic_predicates(t)["is_commutative"] for t in dropped)
    assert any(satisfies_identity(t, "ab=b") for t in dropped)


def test_order_four_counts(census4):
    labelled = enumerate_semigroups(4)
    assert len(labelled) == 3492
    assert sum(1 for t in labelled if satisfies_identity(t, "aba=ab")) == 683
    assert len(enumerate_semigroups(4, left_legal=True)) == 683
    assert [sum(1 for t in census4 if t.order == n) for n in range(1, 5)] == [1, 5, 24, 188]
    assert len(enumerate_semigroups(3)) == 113


def test_left_legal_census_counts(ll_census5):
    assert [sum(1 for t in ll_census5 if t.order == n) for n in range(1, 6)] == [1, 3, 10, 43, 222]


@pytest.mark.parametrize("identities", [["ab=ba"], ["aa=a"], ["ab=ac"], ["abc=acb", "ab=aab"]])
def test_identity_filter_matches_post_filter(identities):
    got = enumerate_semigroups(3, identities)
    want = [t for t in enumerate_semigroups(3) if all(satisfies_identity(t, i) for i in identities)]
    assert got == want


def test_left_legal_identity_same_as_flag():
    assert enumerate_semigroups(3, ["aba=ab"]) == enumerate_semigroups(3, left_legal=True)


def test_enumeration_deterministic():
    a = enumerate_semigroups(3, up_to_iso=True)
    b = enumerate_semigroups(3, up_to_iso=True)
    assert [t.table.tobytes() for t in a] == [t.table.tobytes() for t in b]


def test_enumeration_bounds():
    with pytest.raises(SizeError):
        enumerate_semigroups(5)
    with pytest.raises(SizeError):
        enumerate_semigroups(6, left_legal=True)
    with pytest.raises(ValueError):
        enumerate_semigroups(0)


def test_members_of_c_are_left_legal(census4):
    for t in census4:
        if VARIETIES["C"].contains(t):
            assert satisfies_identity(t, "aba=ab")


def check_embedding(t, congruences):
    ambient, image = subdirect_image(t, congruences)
    assert len(set(image)) == t.order
    for a in range(t.order):
        for b in range(t.order):
            assert image[t.mul(a, b)] == ambient.mul(image[a], image[b])
    return ambient


def test_table4_embeds_in_lz_times_zm(table4):
    kern, rees = lrb_zm_decomposition(table4)
    ambient = check_embedding(table4, [kern, rees])
    lz, zm = quotient(table4, kern), quotient(table4, rees)
    assert are_isomorphic(lz, left_zero(2)) is not None
    assert are_isomorphic(zm, zero_semigroup(3)) is not None
    assert are_isomorphic(ambient, direct_product(left_zero(2), zero_semigroup(3))) is not None


def test_a_members_decompose(ll_census5):
    for t in ll_census5:
        if not VARIETIES["A"].contains(t):
            continue
        kern, rees = lrb_zm_decomposition(t)
        assert kern.meet(rees).is_discrete()
        assert basic_predicates(quotient(t, kern))["is_left_regular_band"]
        assert basic_predicates(quotient(t, rees))["is_zero_semigroup"]
        if t.order <= 4:
            check_embedding(t, [kern, rees])
            assert kern in enumerate_congruences(t) and rees in enumerate_congruences(t)


def test_membership_of_constructors():
    assert "SL" in variety_membership(chain_semilattice(4))
    assert variety_membership(trivial()) == NODES
