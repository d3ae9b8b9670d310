from itertools import combinations

import pytest
from hypothesis import given, settings

from matchmat.analysis import color_analysis, degenerate_triangles, split_degenerate_triangles
from matchmat.constructions import recursive_cover
from matchmat.graph import complete
from matchmat.matroid import Cover, CoverError, verify_cover
from matchmat.solver import decide_mu_leq

from helpers import graphs


def _classes_distinct_and_types_meet(cover):
    report = color_analysis(cover)
    classes = list(report.color_class.values())
    distinct = len(set(classes)) == len(classes)
    meet = all(s & t for cls in classes for s, t in combinations(cls, 2))
    return distinct, meet


def test_k3_single_system():
    cover = recursive_cover(1)
    report = color_analysis(cover)
    assert report.degenerate_triangles == [(1, 2, 3, 1)]
    assert report.color_type[(1, 2)] == frozenset({1})
    assert "degenerate triangle 1 2 3 in system 1" in report.lines()


def test_split_k3():
    out = split_degenerate_triangles(recursive_cover(1))
    assert out.m == 3
    assert [sorted(s) for s in out.systems] == [[0], [1], [2]]
    assert verify_cover(out).ok
    assert not degenerate_triangles(out)


def test_split_without_degenerate_triangles_is_identity():
    cover = recursive_cover(4)
    if not degenerate_triangles(cover):
        assert split_degenerate_triangles(cover) is cover


def test_split_rejects_invalid_cover():
    g = complete(3)
    with pytest.raises(CoverError):
        split_degenerate_triangles(Cover(g, (frozenset({0}),)))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_split_recursive_covers(m):
    cover = recursive_cover(m)
    out = split_degenerate_triangles(cover)
    assert verify_cover(out).ok
    assert not degenerate_triangles(out)
    assert out.m <= 3 * cover.m
    assert _classes_distinct_and_types_meet(out) == (True, True)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_split_solver_witnesses(g):
    res = decide_mu_leq(g, 4)
    out = split_degenerate_triangles(res.witness)
    assert verify_cover(out).ok
    assert not degenerate_triangles(out)
    assert out.m <= 3 * res.witness.m


@pytest.mark.parametrize("n, m", [(4, 3), (5, 4), (6, 4), (6, 5), (7, 4)])
def test_color_classes_on_complete_graphs(n, m):
    cover = split_degenerate_triangles(decide_mu_leq(complete(n), m).witness)
    assert _classes_distinct_and_types_meet(cover) == (True, True)


def test_color_types_bounded_by_subsets():
    cover = recursive_cover(4)
    report = color_analysis(cover)
    assert all(t and t <= set(range(1, cover.m + 1)) for t in report.color_type.values())
    assert len(set(report.color_type.values())) <= 2 ** cover.m - 1
