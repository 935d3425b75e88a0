"""Spanning-tree counting and census against exhaustive oracles."""

import pytest

from cgtportal.errors import SizeLimitExceededError
from cgtportal.graphs import Graph, complete, cycle, petersen, wheel
from cgtportal.indexes import spanning_tree_census, spanning_tree_count

from tests.util import ahu_canonical, spanning_trees_by_subsets


def test_cycle_count():
    for n in (3, 5, 8):
        assert spanning_tree_count(cycle(n)) == n


def test_cayley_on_complete_graphs():
    for n in (2, 3, 4, 5, 6):
        assert spanning_tree_count(complete(n)) == n ** (n - 2)


def test_disconnected_counts_zero():
    assert spanning_tree_count(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


def test_single_vertex_counts_one():
    assert spanning_tree_count(Graph.from_edges(1, [])) == 1


def test_petersen_count_is_2000():
    assert spanning_tree_count(petersen()) == 2000


def test_petersen_count_matches_exhaustive_enumeration():
    assert len(spanning_trees_by_subsets(petersen())) == 2000


def test_complete4_census_against_exhaustive_oracle():
    # Oracle: all 16 labeled trees on K_4, classified by AHU canonical form.
    trees = spanning_trees_by_subsets(complete(4))
    assert len(trees) == 16
    by_form: dict[str, int] = {}
    for edges in trees:
        form = ahu_canonical(Graph.from_edges(4, edges))
        by_form[form] = by_form.get(form, 0) + 1
    assert sorted(by_form.values()) == [4, 12]

    classes = spanning_tree_census(complete(4))
    assert len(classes) == 2
    star_class = next(c for c in classes if c.multiplicity == 4)
    path_class = next(c for c in classes if c.multiplicity == 12)
    assert star_class.wiener == 9
    assert path_class.wiener == 10  # 1+2+3+1+2+1
    assert sorted(d for d in (len(a) for a in star_class.representative.adjacency)) == [1, 1, 1, 3]


def test_cycle4_census_single_path_class():
    classes = spanning_tree_census(cycle(4))
    assert len(classes) == 1
    assert classes[0].multiplicity == 4
    assert classes[0].wiener == 10


def test_census_multiplicities_sum_to_count():
    for g in (cycle(6), wheel(6), complete(5)):
        classes = spanning_tree_census(g)
        assert sum(c.multiplicity for c in classes) == spanning_tree_count(g)


def test_census_classes_match_ahu_partition():
    # Same classes as the fully independent AHU grouping, on a non-trivial graph.
    g = wheel(6)
    oracle: dict[str, int] = {}
    for edges in spanning_trees_by_subsets(g):
        form = ahu_canonical(Graph.from_edges(g.n, edges))
        oracle[form] = oracle.get(form, 0) + 1
    classes = spanning_tree_census(g)
    ours = sorted(
        (ahu_canonical(c.representative), c.multiplicity) for c in classes
    )
    assert ours == sorted(oracle.items())


def test_census_is_deterministic():
    first = spanning_tree_census(complete(5))
    second = spanning_tree_census(complete(5))
    assert [(c.multiplicity, c.wiener, c.representative.edges) for c in first] == [
        (c.multiplicity, c.wiener, c.representative.edges) for c in second
    ]


def test_census_size_guard():
    with pytest.raises(SizeLimitExceededError):
        spanning_tree_census(complete(8))  # 28 edges, over the guard
    # overridable
    classes = spanning_tree_census(cycle(4), override_size_limit=True)
    assert classes[0].multiplicity == 4
