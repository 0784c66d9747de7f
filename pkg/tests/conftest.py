from __future__ import annotations

from hypothesis import strategies as st

from taskdag.graph import OrderedDag, ordered_pairs


@st.composite
def ordered_dags(draw, min_n: int = 1, max_n: int = 7) -> OrderedDag:
    n = draw(st.integers(min_n, max_n))
    pairs = ordered_pairs(n)
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return OrderedDag.from_edges(n, edges)
