"""Random recursive trees: the expected 1 -> k distance is the harmonic number.

Run with:  python demos/07_random_tree_depths.py
"""

from taskdag import expected_tree_path_length, random_directed_tree

N = 16
TRIALS = 20_000

totals = [0] * (N + 1)
for seed in range(TRIALS):
    tree = random_directed_tree(N, seed)
    parent = {b: a for a, b in tree.edges()}
    for k in range(2, N + 1):
        depth, v = 0, k
        while v != 1:
            v = parent[v]
            depth += 1
        totals[k] += depth

print(f"mean distance from vertex 1 over {TRIALS} trees of order {N}:")
print(f"{'k':>3s} {'measured':>9s} {'harmonic H(k-1)':>16s}")
for k in range(2, N + 1):
    expected = expected_tree_path_length(k)
    print(f"{k:>3d} {totals[k] / TRIALS:9.4f} {float(expected):16.4f}  ({expected})")

print()
print("The exact recurrence: consecutive expectations differ by exactly 1/k.")
for k in (1, 2, 3, 10):
    delta = expected_tree_path_length(k + 1) - expected_tree_path_length(k)
    print(f"  f({k + 1}) - f({k}) = {delta}")
