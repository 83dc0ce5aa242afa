# Words, normal forms and the free left legal semigroup on a few letters.

from leftlegal import words
from leftlegal.finite import format_cayley, satisfies_identity

# every word collapses to its first letter (doubled if it repeats straight
# away) followed by the remaining letters in order of first appearance
for w in ["xxxyz", "xyx", "yyxyx", "xyxzyx"]:
    print(w, "->", words.format_word(words.normalize(tuple(w))))

# products of normal forms, computed without concatenating and reducing
print("x * xy =", words.format_word(words.circ(tuple("x"), tuple("xy"))))
print("yy * x =", words.format_word(words.circ(tuple("yy"), tuple("x"))))

# equal elements, different spellings
print("xyxz ~ xyzz:", words.are_equivalent(tuple("xyxz"), tuple("xyzz")))

# the whole semigroup on {x, y} has eight elements
elements, t = words.free_semigroup("xy")
print(format_cayley(t))

# sizes grow quickly; three letters already give 30 elements
for n in range(1, 5):
    print(n, "letters:", words.free_size(n), "elements")

_, t3 = words.free_semigroup("xyz")
print("aba=ab holds on the 3-letter table:", satisfies_identity(t3, "aba=ab"))
