"""Parameters compatible with an (alcove, face) pair.

A compatible parameter is a rational lambda together with a face-interior
direction mu such that lambda + p*mu sits in the p-alcove with margins
constant in p on the walls through the face and growing linearly in p on
the rest.  The wall-crossing lattice element chi connects the parameters on
the two sides of a face.
"""

import json
from fractions import Fraction as F

from alcovelab import (faces_of, find_compatible, hilb_instance,
                       opposite_pair, real_alcove_of, verify_compatible,
                       weyl_a_instance)

# --- Hilb: the face {1/2} of the alcove (1/2, 3/2) --------------------------

hilb = hilb_instance(2, 0)
A = real_alcove_of((F(1),), hilb.walls)
theta = next(f for f in faces_of(A, hilb.walls)
             if f.codim == 1 and f.witness == (F(1, 2),))
pair = find_compatible(A, theta, hilb.walls)
print("compatible pair: lambda =", pair.lam, " mu =", pair.mu)
print("family lambda + p*mu:", [str(a) for a in pair.p_point_affine()])

rep = verify_compatible(pair, hilb.walls, p_samples=(23, 47))
print("verification:", json.dumps(rep, indent=1, default=str))

# crossing the face: the opposite parameter differs by a lattice element
pm, chi = opposite_pair(A, theta, pair, hilb.walls)
print("opposite lambda:", pm.lam, " chi =", chi)

# --- A_2: a vertex face gives the rho-like parameter ------------------------

a2 = weyl_a_instance(3)
A = real_alcove_of((F(1, 3), F(1, 3)), a2.walls)
vertex = next(f for f in faces_of(A, a2.walls)
              if f.codim == 2 and f.witness == (F(0), F(0)))
pair = find_compatible(A, vertex, a2.walls)
print("\nA_2 vertex pair: lambda =", pair.lam, " mu =", pair.mu)
print("symbolically verified:",
      verify_compatible(pair, a2.walls)["passed"])
