"""The named graph families: extremal constructions and the two process traps.

Run with:  python demos/02_named_families.py
"""

from taskdag import (
    addition_trap,
    densest_connected_minimal_graph,
    densest_graph,
    densest_minimal_graph,
    is_minimal_xy,
    removal_trap,
)
from taskdag.graph import ordered_pairs

print("== Densest minimal (x, y) graphs: 2n - x - y - 2 edges ==")
for x, y, n in [(1, 1, 6), (2, 1, 6), (3, 2, 8)]:
    g = densest_minimal_graph(x, y, n)
    print(
        f"(x={x}, y={y}, n={n}): {g.edge_count} edges "
        f"(formula {2 * n - x - y - 2}), minimal={is_minimal_xy(g)}, "
        f"longest path {g.longest_path_length()}"
    )

print()
print("== Connected variant: same edge count, one component ==")
g = densest_connected_minimal_graph(2, 2, 8)
print(f"(2, 2, 8): {g.edge_count} edges, components {len(g.underlying_components())}")

print()
print("== Densest (x, y) graph without the minimality constraint ==")
q = densest_graph(2, 2, 6)
print(f"(2, 2, 6): {q.edge_count} edges, profile {q.profile().counts}")

print()
print("== The removal trap: a (y, y) state the removal process cannot leave ==")
trap = removal_trap(2, 6)
print(f"trap(y=2, n=6) profile: {trap.profile().counts}, edges {trap.edges()}")
for a, b in trap.edges():
    peek = trap.copy()
    peek.remove_edge(a, b)
    print(f"  removing ({a},{b}) would give {len(peek.profile().terminal)} sinks (cap is 2)")

print()
print("== The addition trap: x sources, y+1 sinks, and no legal addition ==")
trap = addition_trap(3, 1, 6)
print(f"trap(x=3, y=1, n=6) profile: {trap.profile().counts}")
blocked = 0
for a, b in ordered_pairs(6):
    if trap.has_edge(a, b):
        continue
    peek = trap.copy()
    peek.add_edge(a, b)
    blocked += len(peek.profile().initial) < 3
print(f"absent edges whose addition would drop below 3 sources: {blocked} of "
      f"{len(ordered_pairs(6)) - trap.edge_count}")
