"""Closed-form extremal values checked against exhaustive enumeration.

Every formula the library exposes is recomputed here by brute force over all
2^binom(n,2) graphs at small n.  Run with:  python demos/04_extremal_vs_bruteforce.py
"""

from itertools import product

from taskdag import DomainError, ExtremalKind, extremal_value, oracle_extremal

print(f"{'kind':30s} {'x':>2s} {'y':>2s} {'n':>2s} {'closed':>7s} {'brute':>6s}  verdict")
checked = mismatches = 0
for kind, x, y, n in product(ExtremalKind, (1, 2), (1, 2), (3, 4, 5)):
    try:
        closed = extremal_value(kind, x, y, n)
    except DomainError:
        continue
    brute = oracle_extremal(kind, x, y, n)
    verdict = "ok" if closed == brute else "MISMATCH"
    mismatches += closed != brute
    checked += 1
    print(f"{kind.value:30s} {x:2d} {y:2d} {n:2d} {closed:7d} {brute:6d}  {verdict}")

print()
print(f"{checked} in-domain combinations checked, {mismatches} mismatches")

print()
print("== The structure behind the max-minimal count ==")
from taskdag import classify_extremal, densest_minimal_graph

for x, y, n in [(1, 1, 6), (2, 1, 5), (2, 2, 6)]:
    g = densest_minimal_graph(x, y, n)
    case = classify_extremal(g, x, y)
    print(f"densest minimal ({x}, {y}, {n}): {case.label.value}  witness keys "
          f"{sorted(case.witness)}")
