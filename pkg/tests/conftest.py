from fractions import Fraction

import pytest

from ftpolytope.core import build_constraints, new_instance
from ftpolytope.library import build_adjacency, enumerate_all

F = Fraction


@pytest.fixture
def counterexample():
    '''{3,3,4,2}: an exact partition {3,3}|{4,2} plus s_4 = s_max/2, so P_R is not simple'''
    return new_instance([3, 3, 4, 2])

@pytest.fixture
def control():
    '''{2,2,3,1}: odd s_max, simple P_R'''
    return new_instance([2, 2, 3, 1])

@pytest.fixture
def pair():
    return new_instance([1, 1])

@pytest.fixture
def four_degenerate():
    return new_instance([4, 2, 2, 4])


@pytest.fixture
def counterexample_cs(counterexample):
    return build_constraints(counterexample)

@pytest.fixture
def counterexample_vertices(counterexample_cs):
    return enumerate_all(counterexample_cs)

@pytest.fixture
def counterexample_graph(counterexample_cs, counterexample_vertices):
    return build_adjacency(counterexample_vertices, counterexample_cs)

@pytest.fixture
def control_graph(control):
    cs = build_constraints(control)
    return build_adjacency(enumerate_all(cs), cs)

@pytest.fixture
def pair_graph(pair):
    cs = build_constraints(pair)
    return build_adjacency(enumerate_all(cs), cs)

DEGENERATE = (F(1), F(1), F(0), F(1, 390))
