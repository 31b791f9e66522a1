import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxwiener.errors import InvalidTree, NotTreeGraphic, TooSmall, WienerOverflow
from maxwiener.graph import (
    Tree,
    check_int64,
    format_tree,
    parse_tree,
    path_tree,
    random_tree,
    read_tree,
    star_tree,
    tree_from_prufer,
    validate_degree_sequence,
    wiener_edgecut,
    wiener_pairwise,
)


def test_validate_sorts_and_counts():
    d = validate_degree_sequence([1, 5, 5, 13, 5, 4, 3] + [1] * 24)
    assert d.degrees == (13, 5, 5, 5, 4, 3) + (1,) * 25
    assert (d.n, d.k) == (31, 6)
    assert d.internal_weights == (12, 4, 4, 4, 3, 2)


def test_single_edge():
    d = validate_degree_sequence([1, 1])
    assert (d.n, d.k) == (2, 0)


@pytest.mark.parametrize("raw", [[2, 2, 2], [3, 1], [0, 2, 1, 1], [2, 1, -1, 1, 1]])
def test_not_tree_graphic(raw):
    with pytest.raises(NotTreeGraphic):
        validate_degree_sequence(raw)


@pytest.mark.parametrize("raw", [[], [0], [1]])
def test_too_small(raw):
    with pytest.raises((TooSmall, NotTreeGraphic)):
        validate_degree_sequence(raw)


def test_too_small_single_vertex():
    with pytest.raises(TooSmall):
        validate_degree_sequence([1])


def test_small_trees():
    assert wiener_pairwise(path_tree(4)) == wiener_edgecut(path_tree(4)) == 10
    assert wiener_pairwise(star_tree(4)) == wiener_edgecut(star_tree(4)) == 9


def test_single_vertex_is_zero():
    t = Tree(1, ())
    assert wiener_pairwise(t) == wiener_edgecut(t) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 7, 30, 101])
def test_path_and_star_closed_forms(n):
    assert wiener_pairwise(path_tree(n)) == wiener_edgecut(path_tree(n)) == n * (n * n - 1) // 6
    assert wiener_pairwise(star_tree(n)) == wiener_edgecut(star_tree(n)) == (n - 1) ** 2


def test_oracles_agree_with_networkx():
    rng = random.Random(7)
    for _ in range(30):
        t = random_tree(rng.randint(1, 60), rng)
        expected = int(nx.wiener_index(t.to_networkx())) if t.n > 1 else 0
        assert wiener_pairwise(t) == wiener_edgecut(t) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=29), min_size=0, max_size=28).flatmap(
    lambda code: st.just([c % (len(code) + 2) for c in code])))
def test_prufer_trees_roundtrip_degree_sequence(code):
    t = tree_from_prufer(code)
    assert wiener_pairwise(t) == wiener_edgecut(t)
    d = t.degree_sequence()
    assert sorted(d.degrees, reverse=True) == sorted(t.degrees(), reverse=True)
    assert sum(d.degrees) == 2 * (t.n - 1)


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 1)]),  # too few edges
        (3, [(0, 1), (1, 0)]),  # duplicate
        (4, [(0, 1), (1, 2), (2, 0)]),  # cycle, so disconnected
        (3, [(0, 1), (1, 3)]),  # label out of range
        (2, [(1, 1)]),
    ],
)
def test_invalid_trees(n, edges):
    with pytest.raises(InvalidTree):
        Tree(n, tuple(edges))


def test_tree_file_roundtrip(tmp_path):
    t = random_tree(25, random.Random(3))
    p = tmp_path / "t.txt"
    p.write_text(format_tree(t))
    assert read_tree(p) == t


@pytest.mark.parametrize("text", ["", "3\n0 1\n", "3\n0 1\n0 1\n", "x\n", "3\n0 1 2\n1 2\n", "3\n0 a\n1 2\n"])
def test_tree_file_rejects(text):
    with pytest.raises(InvalidTree):
        parse_tree(text)


def test_caterpillar_detection():
    assert path_tree(6).is_caterpillar()
    assert star_tree(6).is_caterpillar()
    # spider with three legs of length 2 is not a caterpillar
    spider = Tree(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)))
    assert not spider.is_caterpillar()


def test_int64_guard():
    assert check_int64(2**63 - 1) == 2**63 - 1
    with pytest.raises(WienerOverflow):
        check_int64(2**63)
