"""Pattern-aware noncrossing combinatorics.

A partition of word positions is admissible when it refines the word's
kernel and every crossing between two of its blocks happens at a pair of
letters the pattern declares commuting.
"""

from epsym import (Category, enumerate_partitions, format_partition,
                   is_eps_noncrossing, nc_eps_set, parse_partition, preset)

# plain enumeration in restricted-growth order
print("partitions of 4 points:", len(enumerate_partitions(4)))
print("noncrossing ones:", len(enumerate_partitions(4, noncrossing_only=True)))
print("noncrossing pairings:",
      [format_partition(p)
       for p in enumerate_partitions(4, Category.PAIR, noncrossing_only=True)])

# one crossing, two patterns
crossing = parse_partition("{1,3}{2,4}")
word = (1, 2, 1, 2)
for name in ("comm", "free"):
    eps = preset(name, 2)
    print(f"{name}: crossing pairing admissible for {word}?",
          is_eps_noncrossing(crossing, word, eps))

# the admissible set drives the moment formula below; for the word
# 1,2,1,2 and the classical pattern only the crossing pairing survives
# among pairings
eps = preset("comm", 2)
print("admissible pairings for 1,2,1,2 (classical):",
      [format_partition(p) for p in nc_eps_set(word, eps, Category.PAIR)])

# a constant word never allows crossings (the diagonal is zero), so the
# admissible set is exactly the noncrossing refinements
eps5 = preset("ex-f")
print("admissible for 1,1,1,1 under the five-cycle:",
      len(nc_eps_set((1, 1, 1, 1), eps5)))
