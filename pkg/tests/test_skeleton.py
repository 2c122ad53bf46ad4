from itertools import combinations
import random
import time

from hypothesis import given, settings, strategies as st
import networkx as nx
import pytest

from ftpolytope.core import FTError, FTStatus, build_constraints, new_instance
from ftpolytope.library import (PolytopeGraph, build_adjacency, enumerate_all, graph_metrics, monotone_metrics,
                                random_instance)

from conftest import DEGENERATE


def test_counterexample_degrees(counterexample_graph):
    g = counterexample_graph
    for v, degree in zip(g.vertices, g.degrees):
        assert degree == (6 if v.coords == DEGENERATE else 4)

def test_degenerate_neighbors(counterexample_graph):
    g = counterexample_graph
    k = next(k for k, v in enumerate(g.vertices) if v.degenerate)
    assert len(g.neighbors(k)) == 6
    assert all(k in g.neighbors(j) for j in g.neighbors(k))

def test_control_is_simple(control_graph):
    assert set(control_graph.degrees) == {4}
    assert len(control_graph.edges) == 24 * 4 // 2

def test_pentagon(pair_graph):
    g = pair_graph
    assert len(g.vertices) == 5 and len(g.edges) == 5
    assert nx.is_isomorphic(g.nx_graph, nx.cycle_graph(5))
    assert graph_metrics(g) == (2, (2, 2, 2, 2, 2))

def test_pentagon_monotone(pair_graph):
    # vertices in order (0,0), (0,1), (1/24,1), (1,0), (1,1/24); the two on K1 are optimal
    assert monotone_metrics(pair_graph) == (2, (2, 1, 0, 1, 0))

@pytest.mark.parametrize('graph', ['counterexample_graph', 'control_graph', 'pair_graph'])
def test_floyd_warshall_agrees(graph, request):
    g = request.getfixturevalue(graph)
    assert graph_metrics(g, method='floyd-warshall') == graph_metrics(g, method='bfs')

def test_unknown_method(pair_graph):
    with pytest.raises(ValueError):
        graph_metrics(pair_graph, method='dfs')

def test_disconnected(pair_graph):
    broken = PolytopeGraph(pair_graph.vertices[:2], frozenset(), (0, 0))
    with pytest.raises(FTError) as err:
        graph_metrics(broken)
    assert err.value.status is FTStatus.Disconnected

def test_monotone_distances(counterexample_graph):
    g = counterexample_graph
    monotone, distances = monotone_metrics(g)
    values = [sum(v.coords) for v in g.vertices]
    for value, distance in zip(values, distances):
        assert (distance == 0) == (value == max(values))
    assert monotone == max(distances) >= 1

@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 10), min_size=4, max_size=4).map(new_instance))
def test_odd_max_is_simple(inst):
    if inst.s_max % 2 == 0:
        inst = inst.shifted(1)
    cs = build_constraints(inst)
    g = build_adjacency(enumerate_all(cs), cs)
    assert set(g.degrees) == {cs.dimension}
    diameter, ecc = graph_metrics(g)
    assert diameter == max(ecc) >= 1

########################################################################################################################
# the bucketed adjacency against the direct pairwise definition

def _pairwise_edges(vertices, cs):
    masks = [sum(1 << j for j in v.active) for v in vertices]
    edges = set()
    for u, w in combinations(range(len(vertices)), 2):
        common = masks[u] & masks[w]
        if common.bit_count() >= cs.dimension - 1 and sum(mask & common == common for mask in masks) == 2:
            edges.add((u, w))
    return edges

@pytest.mark.parametrize('elements', [[3, 3, 4, 2], [4, 2, 2, 4], [1, 1], [2, 4, 4, 2, 3, 3], [7, 1, 3, 5, 2, 6, 4, 4]])
def test_matches_pairwise_definition(elements):
    cs = build_constraints(new_instance(elements))
    vertices = enumerate_all(cs)
    assert build_adjacency(vertices, cs).edges == _pairwise_edges(vertices, cs)

@pytest.mark.slow
def test_adjacency_at_dimension_twelve():
    cs = build_constraints(random_instance(random.Random(12), 12))
    vertices = enumerate_all(cs)
    start = time.perf_counter()
    g = build_adjacency(vertices, cs)
    assert time.perf_counter() - start < 20
    assert all(deg == 12 for v, deg in zip(g.vertices, g.degrees) if not v.degenerate)
