import random

import pytest
from hypothesis import strategies as st

from ngscan import graphs as gr


@st.composite
def graph_strategy(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << gr.edge_slots(n)) - 1))
    return gr.graph_from_mask(n, mask)


@st.composite
def graph_with_permutation(draw, min_n=2, max_n=7):
    g = draw(graph_strategy(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


def random_graph(rng: random.Random, n: int) -> gr.Graph:
    return gr.graph_from_mask(n, rng.getrandbits(gr.edge_slots(n)))


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240831)
