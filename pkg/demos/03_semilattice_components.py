# Semilattice components of a left legal semigroup, three ways.

import numpy as np

from leftlegal.congruences import least_semilattice_congruence
from leftlegal.fixtures import load_fixture
from leftlegal.finite import quotient
from leftlegal.structure import eta_relation, semilattice_components, tau_relation
from leftlegal.words import free_semigroup

_, free = free_semigroup("xy")
t3 = load_fixture("table3")

for t in (free, t3):
    eta = eta_relation(t).relation
    print("eta:       ", eta.format(t.names))
    print("tau:       ", tau_relation(t).relation.format(t.names))
    print("components:", semilattice_components(t).format(t.names))
    # the brute force answer, meeting every semilattice congruence
    print("least:     ", least_semilattice_congruence(t).format(t.names))

    q = quotient(t, eta)
    print("quotient table:")
    print(np.asarray(q.table))
    print()

# the squares carry the whole decomposition: a and b sit together exactly
# when a^2 and b^2 do
print("squares in table3:", [t3.names[i] for i in t3.squares])
