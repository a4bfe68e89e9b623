"""The reduction that realises membership indicators as tensor maps.

Interval removals and pattern-gated leg swaps turn any partition into a
degree (k -> 0) map whose value on a basis vector e_i is exactly the 0/1
membership of the partition among the admissible refinements of ker i.
"""

from epsym import (Category, format_partition, parse_partition, preset,
                   run_algorithm, verify_oracle)

eps = preset("ex-d")
pi = parse_partition("{1,3}{2,4}")
trace, mp = run_algorithm(pi, eps, Category.PAIR, 4)

print(f"reducing {format_partition(pi)}:")
for idx, st in enumerate(trace.steps):
    if st.case == 1:
        move = f"remove {format_partition(st.sigma)} at {st.p}..{st.q}"
    else:
        move = f"swap legs {st.l},{st.l + 1}"
    print(f"  step {idx}: {move:30s} -> {format_partition(st.result) or '(empty)'}")

# the composed map evaluates the membership indicator
print("value on e_1 x e_2 x e_1 x e_2:", mp.scalar_at((1, 2, 1, 2), ()))
print("value on e_1 x e_3 x e_1 x e_3:", mp.scalar_at((1, 3, 1, 3), ()))

# exhaustive comparison with the combinatorial membership test
print(verify_oracle(pi, eps, Category.PAIR, 4).line())

# a sixteen-point partition with three-point blocks and nested pairs;
# the reduction first eats the nested structure, then swaps legs until
# the crossing three-blocks disentangle
big = parse_partition("{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}")
trace16, _ = run_algorithm(big, preset("comm", 16), Category.ALL, 2)
print(f"\n16-point reduction: {len(trace16.steps)} steps, cases:",
      [st.case for st in trace16.steps])
print(verify_oracle(big, preset("comm", 16), Category.ALL, 2, sample=500).line())
