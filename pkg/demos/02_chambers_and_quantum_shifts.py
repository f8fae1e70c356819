"""Integral walls, positive chambers and quantum chambers.

A regular parameter determines which walls are integral for it, a unique
cone of safe translation directions (the positive chamber), and the
quantum-shifted region cut out by the minimal escapes from each saturated
shift set.
"""

from fractions import Fraction as F

from alcovelab import (Wall, hilb_instance,
                       integral_walls_and_positive_chamber, quantum_chamber,
                       weyl_a_instance)

# --- the SL_3 example with an enlarged shift set on the theta wall ---------

walls = [Wall(1, (1, 0), frozenset([F(0)])),
         Wall(2, (0, 1), frozenset([F(0)])),
         Wall(3, (1, 1), frozenset(map(F, [-2, -1, 0, 1, 2])))]
lam = (1, 2)
int_walls, chamber = integral_walls_and_positive_chamber(lam, walls)
print("integral walls:", [w.id for w in int_walls])
print("positive chamber covectors:", chamber.covectors)
q = quantum_chamber(lam, chamber, walls)
print("quantum chamber:")
for _, alpha, m in q.inequalities:
    print(f"  <{alpha}, .> >= {m}")
# note x1 + x2 >= 3, not 1: the wide sigma~ on the theta wall pushes the
# minimal escape three steps up, so the quantum chamber is not a cone

# --- plain type A: quantum chambers are the rho-shifted Weyl chambers ------

a2 = weyl_a_instance(3)
_, chamber = integral_walls_and_positive_chamber((1, 2), a2.walls)
q = quantum_chamber((1, 2), chamber, a2.walls)
print("\nA_2 quantum chamber:",
      [(alpha, str(m)) for _, alpha, m in q.inequalities])

# --- rank one: two chambers, escape up or down ------------------------------

hilb = hilb_instance(3, 0)
c = F(2, 3) + 2  # congruent to an admissible rational: the wall is integral
int_walls, chamber = integral_walls_and_positive_chamber((c,), hilb.walls)
print("\nHilb, c =", c, "-> positive chamber:", chamber.covectors)
q = quantum_chamber((c,), chamber, hilb.walls)
print("quantum chamber starts at:", str(q.inequalities[0][2]))
