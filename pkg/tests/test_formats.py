import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypermc.formats import (
    FormatError,
    dumps_coloring,
    dumps_hypergraph,
    loads_coloring,
    loads_hypergraph,
)
from hypermc.hypercore import HypergraphError, complete_hypergraph

from helpers import random_coloring, random_hypergraph


def test_hypergraph_text_layout():
    text = dumps_hypergraph(complete_hypergraph(3, 2))
    assert text == "3 2 3\n0 1\n0 2\n1 2\n"


def test_coloring_text_layout():
    G = complete_hypergraph(3, 2)
    chi = loads_coloring("3 2\n0\n1\n1\n", G)
    assert chi.colors == (0, 1, 1) and chi.r == 2
    assert dumps_coloring(chi) == "3 2\n0\n1\n1\n"


def test_non_canonical_file_warns_and_canonicalizes():
    with pytest.warns(UserWarning, match="canonical"):
        G = loads_hypergraph("3 2 2\n1 2\n1 0\n")
    assert G.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "3 2 2\n0 1\n", "3 2 1\n0 x\n"])
def test_malformed_hypergraph(text):
    with pytest.raises(FormatError):
        loads_hypergraph(text)


def test_coloring_must_fit_hypergraph():
    G = complete_hypergraph(3, 2)
    with pytest.raises(HypergraphError):
        loads_coloring("2 2\n0\n1\n", G)
    with pytest.raises(HypergraphError):
        loads_coloring("3 2\n0\n1\n2\n", G)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(3, 9), st.integers(2, 4), st.integers(0, 30))
def test_round_trip(seed, n, k, m):
    rng = random.Random(seed)
    G = random_hypergraph(rng, n, min(k, n), m)
    text = dumps_hypergraph(G)
    assert loads_hypergraph(text) == G
    assert dumps_hypergraph(loads_hypergraph(text)) == text
    chi = random_coloring(rng, G, rng.randint(1, 4))
    ctext = dumps_coloring(chi)
    assert loads_coloring(ctext, G) == chi
    assert dumps_coloring(loads_coloring(ctext)) == ctext
