"""
Stable Demazure characters
==========================

Compute graded classical characters of g-stable affine Demazure modules
by running exponent ladders along a reduced word.
"""

from demflag import (DemazureLabel, affinize, datum_from_label,
                     demazure_character, demazure_dim, solve_extremal)

A1 = datum_from_label("A1")
ad = affinize(A1)

# A label is (level, classical dominant weight, grade).  The solver finds
# the affine dominant weight and the word whose ladder reaches it.
for m in range(4):
    lab = DemazureLabel(1, A1.weight([m]))
    top, word = solve_extremal(ad, lab)
    print(f"level 1, lambda = {m}w:")
    print("  affine top:", top, "word:", word)
    g = demazure_character(ad, lab)
    print("  character:", dict(g.terms()))
    print("  dim:", demazure_dim(ad, lab))
print()

# At level one in rank one the dimensions double with each fundamental.
dims = [demazure_dim(ad, DemazureLabel(1, A1.weight([m]))) for m in range(9)]
print("dims for m = 0..8:", dims)
print()

# Higher level spreads the same classical weight over fewer grades.
C2 = datum_from_label("C2")
c2a = affinize(C2)
g = demazure_character(c2a, DemazureLabel(1, C2.weight([1, 1])))
print("C2 D(1, w1+w2) mass:", g.mass())
for grade in g.grades():
    print("  grade", grade, "slice mass:",
          sum(g.grade_slice(grade).values()))
