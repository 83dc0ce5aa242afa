# Load the bundled tables and run the structure checks on each of them.

from leftlegal.fixtures import FIXTURES, load_fixture
from leftlegal.finite import satisfies_identity, square_ideal
from leftlegal.structure import square_retract_check, theorem_audit
from leftlegal.varieties import variety_membership

for name in FIXTURES:
    t = load_fixture(name)
    subset, _ = square_ideal(t)
    print(f"== {name}: order {t.order}, elements {' '.join(t.names)}")
    print("S^2 =", " ".join(t.names[i] for i in subset))
    print("ab=ac:", satisfies_identity(t, "ab=ac"))

    # a -> a^2 is the only candidate retraction onto S^2
    v = square_retract_check(t)
    print("a -> a^2 is a retraction:", v.is_retract)
    if v.witness:
        a, b = (t.names[i] for i in v.witness)
        print(f"  fails at ({a}, {b})")

    print("varieties:", " ".join(variety_membership(t)))
    print(theorem_audit(t).to_text())
