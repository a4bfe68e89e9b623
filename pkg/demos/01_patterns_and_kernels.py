"""Commutation patterns: presets, validation, kernels.

A pattern is a symmetric 0/1 matrix with zero diagonal.  Entry 1 says
two coordinates commute (classical behaviour), entry 0 leaves them free.
"""

from epsym import format_eps_text, format_partition, kernel, make_epsilon, preset

# the two extremes
print("fully classical, n = 3:")
print(format_eps_text(preset("comm", 3)))
print("fully free, n = 3:")
print(format_eps_text(preset("free", 3)))

# two independent pairs, free from each other
print("two commuting pairs (ex-d):")
print(format_eps_text(preset("ex-d")))

# the five-cycle: each coordinate free from its two neighbours,
# commuting with the rest; not obtainable by iterated grouping
print("five-cycle (ex-f):")
print(format_eps_text(preset("ex-f")))

# validation is strict: symmetry, zero diagonal, bits only
try:
    make_epsilon(2, [[0, 1], [0, 0]])
except ValueError as exc:
    print("rejected:", exc)

# the kernel of a word groups equal letters
for word in [(3, 1, 3), (1, 2, 1, 2), (1, 1, 2)]:
    print(f"kernel{word} = {format_partition(kernel(word))}")
