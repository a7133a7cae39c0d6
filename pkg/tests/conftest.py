import hypothesis.strategies as st
from hypothesis import settings

from lplab import Graph
from lplab.graph import is_connected

settings.register_profile("lplab", deadline=None, max_examples=60)
settings.load_profile("lplab")


@st.composite
def graphs(draw, min_order=1, max_order=7, loops=False):
    """Uniform random graph from an edge bit mask (optionally with loops)."""
    n = draw(st.integers(min_order, max_order))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1))
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if (mask >> k) & 1:
                edges.append((i, j))
            k += 1
    if loops:
        loop_mask = draw(st.integers(0, (1 << n) - 1))
        edges += [(v, v) for v in range(n) if (loop_mask >> v) & 1]
    return Graph.from_edges(n, edges)


def connected_graphs(min_order=1, max_order=7):
    return graphs(min_order=min_order, max_order=max_order).filter(is_connected)
