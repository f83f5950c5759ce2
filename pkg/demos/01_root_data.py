"""
Root data from type labels
==========================

Build finite and affine root data, inspect Cartan matrices and highest
roots, and walk a weight back into the dominant chamber.
"""

from demflag import affinize, apply_word, datum_from_label, make_dominant

# A finite datum knows its Cartan matrix in Bourbaki numbering, the
# positive roots, and the highest root.
g2 = datum_from_label("G2")
print("G2 Cartan matrix:", g2.cartan)
print("G2 positive roots:", len(g2.positive_roots))
print("G2 highest root coords:", g2.theta_coords, "h-values:", g2.theta_h)
print("G2 short simple nodes:", g2.short_nodes, "lacing:", g2.lacing)
print()

# The untwisted affinization adds node 0.  The null root delta pairs to
# zero with every coroot and shows up as a pure grade shift.
A1 = datum_from_label("A1")
ad = affinize(A1)
print("affine label:", ad.label)
print("delta:", ad.delta)
print("alpha_0:", ad.simple_root(0))
print()

# Reflections act on h-values; apply_word applies the last letter first.
mu = ad.weight([3, -2], 0)
print("mu:", mu, "level:", ad.level(mu))
lam, word = make_dominant(ad, mu)
print("dominant representative:", lam)
print("word (application order):", word)
print("check:", apply_word(ad, word, lam) == mu)
