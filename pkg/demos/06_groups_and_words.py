"""Finite symmetries of a pattern and the involution word problem."""

from epsym import (Permutation, automorphism_group, check_coxeter_rep,
                   entries_commute, perm_representation,
                   permutation_satisfies_R_eps, preset,
                   projection_pair_representation, rep_check, word_equal,
                   word_reduce)

# the automorphism group of the two-pairs pattern is dihedral of order 8
eps = preset("ex-d")
group = automorphism_group(eps)
print("order of the two-pairs group:", group.order)
print("a generating set:", [g.images for g in group.generators()])

# the six-vertex pattern below is rigid: only the identity survives
print("trivial six-vertex group:", automorphism_group(preset("trivial6")).order)

# membership is equivalent to the delta form of the exchange relations
sigma = Permutation(4, (2, 1, 3, 4))
print("swap(1,2) satisfies the relations:",
      permutation_satisfies_R_eps(sigma, eps))

# the reflection representation separates commuting from free pairs
print("reflection representation check:", check_coxeter_rep(eps).passed)

# words in n involutions with partial commutations have a computable
# normal form: cancel squares, then take the least commutation
# representative
print("normal form of 1,2,1 (1 and 2 commute):", word_reduce((1, 2, 1), eps))
print("normal form of 1,3,1 (1 and 3 free):  ", word_reduce((1, 3, 1), eps))
print("1,2 equals 2,1:", word_equal((1, 2), (2, 1), eps))

# a 4x4 fundamental matrix over two noncommuting projections satisfies
# the magic and vanishing-exchange relations yet has noncommuting
# entries, so the symmetry object of this pattern is genuinely quantum
u = projection_pair_representation()
print("projection matrix relations:",
      rep_check(u, eps, ["magic", "Rring_eps"]).passed)
print("u[1,1] commutes with u[3,3]:", entries_commute(u, 1, 1, 3, 3))

# permutation matrices of automorphisms satisfy every relation family
print("permutation matrices pass:",
      rep_check(perm_representation(sigma), eps,
                ["magic", "orthogonal", "R_eps", "Rring_eps",
                 "Rprime_eps", "R_aut"]).passed)
