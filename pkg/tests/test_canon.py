import itertools

from hypothesis import given, settings

from conftest import graphs, random_graph
from vminor.canon import brute_force_code, canonical_code, canonical_form, twin_classes
from vminor.graph import build_graph, complete_graph, cycle_graph, empty_graph, is_isomorphic


def test_matches_permutation_minimum(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(0, 7))
        assert canonical_code(g) == brute_force_code(g)


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_canonical_form_is_isomorphic_and_invariant(g):
    cf = canonical_form(g)
    assert is_isomorphic(g, cf) is not None
    assert canonical_code(cf) == canonical_code(g)
    # relabel by reversing and check the code is unchanged
    rev = build_graph(g.n, [(g.n - 1 - x, g.n - 1 - y) for x, y in g.edges()])
    assert canonical_form(rev) == cf


def test_symmetric_graphs():
    for g in (empty_graph(8), complete_graph(8), cycle_graph(8)):
        assert canonical_code(g) == canonical_code(canonical_form(g))
    assert canonical_code(empty_graph(5)) == 0
    assert canonical_code(complete_graph(4)) == 0b111111


def test_twin_classes():
    # path 0-1-2: ends are false twins
    g = build_graph(3, [(0, 1), (1, 2)])
    assert twin_classes(g) == [0, 1, 0]
    assert twin_classes(complete_graph(3)) == [0, 0, 0]


def test_distinct_classes_get_distinct_codes():
    labeled = [
        build_graph(4, [e for e, keep in zip(itertools.combinations(range(4), 2), mask) if keep])
        for mask in itertools.product((0, 1), repeat=6)
    ]
    assert len({canonical_code(g) for g in labeled}) == 11
