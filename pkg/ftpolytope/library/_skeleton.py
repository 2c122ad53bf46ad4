#! python3.11

#    This module is a part of the ftpolytope package.
#
#    This program is libre software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
#    See the LICENSE file for more details.

'''
The 1-skeleton of P_R: which vertices are adjacent, plus the distance metrics on that graph (eccentricity and
diameter, and their monotone counterparts with respect to the ILP2 objective Σ x_i).

Graph algorithms are `networkx`; `PolytopeGraph` itself is an immutable value and builds the `networkx` graph on
demand.
'''

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import combinations
import logging
from typing import Sequence

import networkx as nx

from ..core import ConstraintSystem, FTError, FTStatus
from ._vertices import Vertex

__all__ = ['PolytopeGraph', 'build_adjacency', 'graph_metrics', 'monotone_metrics']

_log = logging.getLogger(__name__)

########################################################################################################################

@dataclass(frozen=True)
class PolytopeGraph:
    '''
    Vertices in canonical (lexicographic) order, edges as sorted index pairs into `vertices`, and per-vertex degrees.
    For a simple P_R every degree is 2m.
    '''
    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]]
    degrees: tuple[int, ...]

    @cached_property
    def nx_graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.vertices)))
        G.add_edges_from(self.edges)
        return G

    def neighbors(self, k:int) -> list[int]:
        return sorted(self.nx_graph.neighbors(k))


def build_adjacency(vertices:Sequence[Vertex], cs:ConstraintSystem) -> PolytopeGraph:
    '''
    u and w are adjacent iff the smallest face containing both, cut out by the constraints active at both, contains no
    other vertex. Needs the *complete* vertex set.

    An edge lies on at least 2m-1 common constraints, so every candidate pair shares some (2m-1)-subset of its active
    sets. Vertices are bucketed under each such subset, and only pairs within a bucket are tested. Any vertex on the
    face of a pair contains the bucket key too, so the face test only scans that bucket.
    '''
    masks = [sum(1 << j for j in v.active) for v in vertices]
    buckets = defaultdict(list)
    for k, v in enumerate(vertices):
        for key in combinations(sorted(v.active), cs.dimension - 1):
            buckets[sum(1 << j for j in key)].append(k)

    edges, tested = set(), set()
    for members in buckets.values():
        for u, w in combinations(members, 2):
            if (u, w) in tested:
                continue
            tested.add((u, w))
            common = masks[u] & masks[w]
            if sum(masks[k] & common == common for k in members) == 2:
                edges.add((u, w))

    degrees = [0] * len(vertices)
    for u, w in edges:
        degrees[u] += 1
        degrees[w] += 1
    _log.debug(f"skeleton: {len(vertices)} vertices, {len(buckets)} buckets, {len(edges)} edges")
    return PolytopeGraph(tuple(vertices), frozenset(edges), tuple(degrees))

########################################################################################################################

def graph_metrics(g:PolytopeGraph, method:str='bfs') -> tuple[int, tuple[int, ...]]:
    '''
    Returns (diameter, eccentricities), eccentricities indexed like `g.vertices`.

    `method` is "bfs" (breadth-first all-pairs shortest paths) or "floyd-warshall"; the two must always agree, and
    the second exists to check the first.
    '''
    G = g.nx_graph
    N = len(g.vertices)
    if N == 0 or not nx.is_connected(G):
        raise FTError(FTStatus.Disconnected, f"{N} vertices, {nx.number_connected_components(G) if N else 0} "
                                             f"components: the vertex enumeration is incomplete")
    if method == 'bfs':
        lengths = dict(nx.all_pairs_shortest_path_length(G))
        ecc = tuple(max(lengths[v].values()) for v in range(N))
    elif method == 'floyd-warshall':
        dist = nx.floyd_warshall(G)
        # distances are sums of unit weights, hence integral
        ecc = tuple(int(max(dist[v].values())) for v in range(N))
    else:
        raise ValueError(f"unknown {method=}")
    return max(ecc), ecc

def _objective(v:Vertex) -> Fraction:
    return sum(v.coords, Fraction(0))

def monotone_metrics(g:PolytopeGraph) -> tuple[int, tuple[int, ...]]:
    '''
    Orient each edge toward strictly larger objective Σ x_i (edges within a level set get no orientation). Returns
    (monotone diameter, distances), where a vertex's distance is the length of its shortest monotone path to any
    optimal vertex. Every non-optimal vertex of a polytope has an improving edge, so every distance exists.
    '''
    values = [_objective(v) for v in g.vertices]
    D = nx.DiGraph()
    D.add_nodes_from(range(len(values)))
    for u, w in g.edges:
        if values[u] < values[w]:
            D.add_edge(u, w)
        elif values[w] < values[u]:
            D.add_edge(w, u)
    best = max(values)
    optima = [k for k, value in enumerate(values) if value == best]
    # shortest paths *into* the optima are shortest paths out of them in the reversed graph
    dist = nx.multi_source_dijkstra_path_length(D.reverse(copy=False), optima)
    if len(dist) != len(values):
        raise FTError(FTStatus.Disconnected, f"{len(values) - len(dist)} vertices have no monotone path to an optimum")
    distances = tuple(dist[k] for k in range(len(values)))
    return max(distances), distances
