"""The mixed moment-cumulant formula and pattern exchangeability.

Joint moments are sums of block-cumulant products over the admissible
partitions.  The classical pattern reproduces independence, the zero
pattern reproduces freeness, and anything in between mixes the two.
"""

from fractions import Fraction

from epsym import (Category, CumulantSpec, check_eps_exchangeability, moment,
                   preset)

semi = CumulantSpec.semicircle(2)

# the signature fourth moment of two standard variables x, y in the word
# x y x y: independent variables give 1, free variables give 0
print("E[xyxy], commuting:", moment((1, 2, 1, 2), preset("comm", 2), semi))
print("E[xyxy], free:     ", moment((1, 2, 1, 2), preset("free", 2), semi))

# single-variable moments never see the pattern: the fourth moment of a
# standard semicircle is the second Catalan number
print("E[x^4]:", moment((1, 1, 1, 1), preset("free", 2), semi))

# even moments of one semicircular variable walk up the Catalan numbers
print("E[x^(2m)] for m = 0..4:",
      [int(moment((1,) * (2 * m), preset("free", 2), semi)) for m in range(5)])

# rational cumulants stay rational
spec = CumulantSpec.constant(2, (Fraction(1, 2), Fraction(1, 3)))
print("with kappa = (1/2, 1/3): E[xyxy] mixed =",
      moment((1, 2, 1, 2), preset("comm", 2), spec))

# family restrictions keep only pairings / one-two blocks / even blocks
print("pair-only moment of x^4:",
      moment((1, 1, 1, 1), preset("free", 2), semi, Category.PAIR))

# identically distributed coordinates have moments invariant under every
# automorphism of the pattern
eps = preset("ex-d")
print("exchangeability under the two-pairs pattern:",
      check_eps_exchangeability(eps, CumulantSpec.semicircle(4), 4).line())
