"""Tour of the carrier type: ordered DAGs on vertices 1..n with a < b edges.

Run with:  python demos/01_graph_basics.py
"""

from taskdag import OrderedDag, complete_graph, empty_graph

print("== The two canonical starting points ==")
e = empty_graph(5)
k = complete_graph(5)
print(f"empty graph on 5 vertices : {e.edge_count} edges, profile {e.profile().counts}")
print(f"complete graph on 5       : {k.edge_count} edges, profile {k.profile().counts}")
print(f"every vertex of the empty graph is isolated: {sorted(e.profile().isolated)}")

print()
print("== Degree bookkeeping follows every mutation ==")
g = empty_graph(4)
for a, b in [(1, 2), (1, 3), (2, 4), (3, 4)]:
    g.add_edge(a, b)
    prof = g.profile()
    print(f"after +({a},{b}): sources {sorted(prof.initial)}, sinks {sorted(prof.terminal)}")

print()
print("== Path, component and ordering analysis ==")
print(f"longest path in the diamond      : {g.longest_path_length()} edges")
print(f"linear extensions of the diamond : {g.count_linear_extensions()}")
print(f"underlying components            : {g.underlying_components()}")
print(f"underlying graph is a forest     : {g.is_underlying_forest()}")
print(f"complete_graph(5) has exactly one ordering: {k.count_linear_extensions()}")

print()
print("== Byte-stable serialization ==")
print("JSON:", g.to_json())
print("DOT :")
print(g.to_dot(), end="")

round_trip = OrderedDag.from_json(g.to_json())
print("JSON round trip reproduces the graph:", round_trip == g)
