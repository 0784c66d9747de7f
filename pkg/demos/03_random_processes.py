"""The four seeded generation processes, one run each, with a trace excerpt.

Run with:  python demos/03_random_processes.py
"""

from taskdag import (
    ProcessConfig,
    ProcessKind,
    combined_process,
    edge_addition_process,
    edge_removal_process,
    random_directed_tree,
)

print("== Edge removal: strip the complete graph, keep sources <= x, sinks <= y ==")
events = []
cfg = ProcessConfig(x=1, y=2, n=8, kind=ProcessKind.REMOVAL, seed=7)
out = edge_removal_process(cfg, trace=lambda *ev: events.append(ev))
print(f"final: {out.graph.edge_count} edges, profile {out.graph.profile().counts}, "
      f"target hit: {out.is_target_xy}, rounds: {out.rounds}")
print("first accepted removals (round, op, a, b, sources, sinks):")
for ev in events[:5]:
    print("  ", ev)

print()
print("== Edge addition: grow the empty graph, halt on an exact (x, y) profile ==")
cfg = ProcessConfig(x=2, y=1, n=8, kind=ProcessKind.ADDITION, seed=7)
out = edge_addition_process(cfg)
print(f"final: {out.graph.edge_count} edges, profile {out.graph.profile().counts}, "
      f"halt: {out.halt_reason.value}")

print()
print("== Combined: addition first, then adjust to an exact edge budget m ==")
for m in (20, 30, 40):
    cfg = ProcessConfig(x=1, y=1, n=12, kind=ProcessKind.COMBINED, seed=3, m=m)
    out = combined_process(cfg)
    print(f"m={m}: edges {out.graph.edge_count}, profile {out.graph.profile().counts}, "
          f"halt {out.halt_reason.value}")

print()
print("== Random recursive tree: vertex s+1 attaches to a uniform earlier vertex ==")
tree = random_directed_tree(10, seed=5)
print(f"edges: {tree.edges()}")
print(f"unique source: {sorted(tree.profile().initial)}, "
      f"sinks: {sorted(tree.profile().terminal)}")

print()
print("== Same seed, same graph, every time ==")
cfg = ProcessConfig(x=1, y=2, n=8, kind=ProcessKind.REMOVAL, seed=7)
first = edge_removal_process(cfg).graph.to_json()
second = edge_removal_process(cfg).graph.to_json()
print("byte-identical rerun:", first == second)
