"""Exact tensor calculus: spreading maps, gated maps, mixed boxes.

All maps are sparse tables of exact rationals on tensor powers of C^n.
The pattern gates a swap and an identity on two legs; superposing them
gives boxes that behave like partition maps, up to loop counts.
"""

from epsym import (CROSS, IDID, PAAR, TensorMap, box_calculus_suite,
                   intertwiner_identity_suite, preset, r_map, s_box, t_pi)

n = 3
eps = preset("ex-f")

# the pair spread and its adjoint contract a loop of size n
paar = t_pi(PAAR, n)
loop = paar.adjoint() @ paar
print("loop value:", loop.scalar_at((), ()))

# the gated swap squares to the gated identity, never to the identity
cross1 = r_map("cross1", eps, n)
print("gated swap squared == gated identity:",
      cross1 @ cross1 == r_map("idid1", eps, n))

# at the extremes the mixed boxes collapse to plain partition maps
print("cross-id box at comm == flip:",
      s_box("cross-id", preset("comm", n)) == t_pi(CROSS, n))
print("cross-id box at free == identity:",
      s_box("cross-id", preset("free", n)) == t_pi(IDID, n))

# the identity suite: bridges, rotations, absorption
print()
print("identity suite for the five-cycle pattern:")
for line in intertwiner_identity_suite(eps).lines():
    print(" ", line)

# the product suite, with the loop-count collapse special to the
# five-cycle: the square of the cross-paar box lands back in the span of
# the named maps because its loop count is [eps_ik=0] + [i=k] + 1
print()
print("product suite for the five-cycle pattern:")
for line in box_calculus_suite(eps).lines():
    print(" ", line)
