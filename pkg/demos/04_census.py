# Small semigroups up to isomorphism, and where they sit among the varieties.

from collections import Counter

from leftlegal.congruences import is_subdirectly_irreducible
from leftlegal.finite import format_cayley
from leftlegal.varieties import NODES, census, enumerate_semigroups, variety_membership

for n in range(1, 5):
    labelled = len(enumerate_semigroups(n))
    iso = len(enumerate_semigroups(n, up_to_iso=True))
    ll = len(enumerate_semigroups(n, left_legal=True, up_to_iso=True))
    print(f"order {n}: {labelled} tables, {iso} up to isomorphism, {ll} left legal")

tables = census(4, left_legal=True)
counts = Counter(v for t in tables for v in variety_membership(t))
print("\nleft legal semigroups of order <= 4 in each variety:")
for v in NODES:
    print(f"  {v:4s}{counts[v]}")

# the subdirectly irreducible ones satisfying ab=ac
print("\nsubdirectly irreducible with ab=ac:")
for t in tables:
    if "B" in variety_membership(t) and is_subdirectly_irreducible(t):
        print(format_cayley(t))
