"""How the final edge count and longest path scale with n for both processes.

Removal stays linear in n (density provably below 3 - 2 ln 2 in the limit);
addition grows quadratically.  Run with:  python demos/06_edge_growth_curves.py
"""

from taskdag import ProcessKind, growth_experiment, removal_density_limit

TRIALS = 500
SEED = 77
SIZES = [10, 20, 30, 40]

print(f"== Removal (1, 1), {TRIALS} trials per n ==")
csv = growth_experiment(ProcessKind.REMOVAL, 1, 1, SIZES, TRIALS, SEED)
print(f"{'n':>4s} {'mean edges':>11s} {'edges/n':>8s} {'mean longest path':>18s}")
for line in csv.strip().split("\n")[1:]:
    n, edges, lp, _ = line.split(",")
    print(f"{n:>4s} {edges:>11s} {float(edges) / int(n):8.3f} {lp:>18s}")
print(f"density ceiling in the limit: {removal_density_limit():.4f}")

print()
print(f"== Addition (1, 1), {TRIALS} trials per n ==")
csv = growth_experiment(ProcessKind.ADDITION, 1, 1, SIZES, TRIALS, SEED)
print(f"{'n':>4s} {'mean edges':>11s} {'edges/n^2':>9s} {'mean longest path':>18s}")
for line in csv.strip().split("\n")[1:]:
    n, edges, lp, _ = line.split(",")
    print(f"{n:>4s} {edges:>11s} {float(edges) / int(n) ** 2:9.4f} {lp:>18s}")
print("edges/n^2 settles near 0.37; the longest path grows linearly.")
