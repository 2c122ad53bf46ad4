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
Exact vertex enumeration of P_R by pattern: every vertex has at most two fractional coordinates, so it suffices to
walk the 0/1 "ones" sets that fit under both knapsacks and, for each, solve for zero, one or two fractional
coordinates with the knapsacks taken tight.

    V0 - 0/1 points (2m box constraints active, never a knapsack thanks to ε)
    V1 - one fractional coordinate, at least one knapsack tight
    V2 - two fractional coordinates, both knapsacks tight

Candidates are computed in integers (`ConstraintSystem.integer_knapsacks`), only survivors become `Fraction`s, and
`vertex_at` then classifies each with its *full* active set, so a V1 vertex lying on both knapsacks is reported as
degenerate no matter which knapsack produced it.
'''

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
import logging
import os
from typing import Iterable, Iterator

from ..core import (ConstraintSystem, FTError, FTStatus, Point, active_set, is_feasible)
from ._rational import rank_exact

__all__ = ['DefaultMaxDim', 'configured_max_dim', 'VertexClass', 'Vertex', 'vertex_at',
           'enumerate_v0', 'enumerate_v1', 'enumerate_v2', 'enumerate_all', 'check_vertex']

_log = logging.getLogger(__name__)

########################################################################################################################

DefaultMaxDim = 16
_MAX_DIM_ENV = 'FT_MAX_DIM'

def configured_max_dim() -> int:
    '''The dimension cap: `FT_MAX_DIM` from the environment if set, else `DefaultMaxDim`.'''
    value = os.environ.get(_MAX_DIM_ENV)
    if value is None:
        return DefaultMaxDim
    try:
        return int(value)
    except ValueError:
        raise FTError(FTStatus.ParseError, f"{_MAX_DIM_ENV}={value!r} is not an integer") from None

########################################################################################################################

class VertexClass(Enum):
    V0 = 0
    V1 = 1
    V2 = 2


@dataclass(frozen=True)
class Vertex:
    '''
    A vertex of P_R with everything the analysis needs: exact coordinates, the positions of its active constraints,
    its class, the index sets I_1, I_0, I_f, α = S/2 - Σ_{I_1} s_i, and whether it is degenerate (|active| > 2m).
    '''
    coords: tuple[Fraction, ...]
    active: frozenset[int]
    vclass: VertexClass
    i1: tuple[int, ...]
    i0: tuple[int, ...]
    if_: tuple[int, ...]
    alpha: Fraction
    degenerate: bool

    @property
    def i_star(self) -> tuple[int, ...]:
        '''I* = I_1 ∪ I_f'''
        return tuple(sorted(self.i1 + self.if_))


def vertex_at(cs:ConstraintSystem, coords:Iterable) -> Vertex:
    '''
    Classify the exact point `coords` as a vertex of `cs`. The caller vouches that it is a vertex; a point with more
    than two fractional coordinates cannot be one and raises InternalError.
    '''
    coords = Point.of(coords).coords
    i1 = tuple(i for i, x in enumerate(coords) if x == 1)
    i0 = tuple(i for i, x in enumerate(coords) if x == 0)
    if_ = tuple(i for i, x in enumerate(coords) if 0 < x < 1)
    if len(i1) + len(i0) + len(if_) != len(coords) or len(if_) > 2:
        raise FTError(FTStatus.InternalError, f"{coords} cannot be a vertex of P_R")
    active = active_set(cs, coords)
    elements = cs.instance.elements
    alpha = Fraction(cs.constants.S, 2) - sum(elements[i] for i in i1)
    return Vertex(coords=coords, active=active, vclass=VertexClass(len(if_)), i1=i1, i0=i0, if_=if_, alpha=alpha,
                  degenerate=len(active) > cs.dimension)

########################################################################################################################
# The pattern walk. All three enumerators share the same outer loop over ones-sets T.

def _ones_sets(cs:ConstraintSystem) -> Iterator[tuple[tuple[int, ...], int, int]]:
    '''
    Yield (T, a·1_T, b·1_T) for every index set T whose indicator fits under both scaled knapsacks, by increasing
    |T|. All coefficients are positive, so once no set of some size fits, no larger one can, and the walk stops.
    '''
    a, R1, b, R2 = cs.integer_knapsacks()
    n = cs.dimension
    for size in range(n + 1):
        fits = 0
        for T in combinations(range(n), size):
            sa = sum(a[i] for i in T)
            sb = sum(b[i] for i in T)
            if sa <= R1 and sb <= R2:
                fits += 1
                yield T, sa, sb
        if not fits:
            return

def _pattern(n:int, ones:tuple[int, ...], fractional:dict[int, Fraction]) -> tuple[Fraction, ...]:
    coords = [Fraction(0)] * n
    for i in ones:
        coords[i] = Fraction(1)
    for i, x in fractional.items():
        coords[i] = x
    return tuple(coords)

def _classified(cs:ConstraintSystem, candidates:Iterable[tuple[Fraction, ...]]) -> list[Vertex]:
    unique = dict.fromkeys(candidates) # deduplicate, keeping first-seen order
    return [vertex_at(cs, coords) for coords in unique]

def enumerate_v0(cs:ConstraintSystem) -> list[Vertex]:
    '''All feasible 0/1 points.'''
    n = cs.dimension
    vertices = _classified(cs, (_pattern(n, T, {}) for T, _, _ in _ones_sets(cs)))
    _log.debug(f"V0: {len(vertices)} vertices")
    return vertices

def _v1_candidates(cs:ConstraintSystem) -> Iterator[tuple[Fraction, ...]]:
    a, R1, b, R2 = cs.integer_knapsacks()
    n = cs.dimension
    for T, sa, sb in _ones_sets(cs):
        members = set(T)
        for j in range(n):
            if j in members:
                continue
            # take each knapsack tight in turn and check the other one
            for coef, rhs, used, other, other_rhs, other_used in ((a, R1, sa, b, R2, sb), (b, R2, sb, a, R1, sa)):
                num = rhs - used # x_j = num / coef[j]
                if not 0 < num < coef[j]:
                    continue
                if other_used * coef[j] + other[j] * num > other_rhs * coef[j]:
                    continue
                yield _pattern(n, T, {j: Fraction(num, coef[j])})

def enumerate_v1(cs:ConstraintSystem) -> list[Vertex]:
    '''
    One fractional coordinate x_j solving a tight knapsack, every other coordinate 0/1. A point tight on both
    knapsacks is generated twice and deduplicated here; it is a degenerate vertex.
    '''
    vertices = _classified(cs, _v1_candidates(cs))
    _log.debug(f"V1: {len(vertices)} vertices, {sum(v.degenerate for v in vertices)} degenerate")
    return vertices

def _v2_candidates(cs:ConstraintSystem) -> Iterator[tuple[Fraction, ...]]:
    a, R1, b, R2 = cs.integer_knapsacks()
    n = cs.dimension
    for T, sa, sb in _ones_sets(cs):
        rest = [i for i in range(n) if i not in T]
        r1, r2 = R1 - sa, R2 - sb
        for j, k in combinations(rest, 2):
            det = a[j] * b[k] - a[k] * b[j]
            if det == 0: # exactly when s_j == s_k: the two knapsack rows are parallel on {j, k}
                continue
            xj = r1 * b[k] - r2 * a[k]
            xk = a[j] * r2 - b[j] * r1
            if det < 0:
                det, xj, xk = -det, -xj, -xk
            if 0 < xj < det and 0 < xk < det:
                yield _pattern(n, T, {j: Fraction(xj, det), k: Fraction(xk, det)})

def enumerate_v2(cs:ConstraintSystem) -> list[Vertex]:
    '''Two fractional coordinates solving both knapsacks tight; singular pairs are skipped.'''
    vertices = _classified(cs, _v2_candidates(cs))
    _log.debug(f"V2: {len(vertices)} vertices")
    return vertices

def enumerate_all(cs:ConstraintSystem, max_dim:int=None) -> list[Vertex]:
    '''
    Every vertex of P_R, deduplicated by exact coordinates, in lexicographic coordinate order.

    The walk costs O(2^(2m) poly(m)), so the dimension is capped (`max_dim`, else `configured_max_dim()`).
    '''
    if max_dim is None:
        max_dim = configured_max_dim()
    if cs.dimension > max_dim:
        raise FTError(FTStatus.DimensionCap, f"2m={cs.dimension} exceeds the cap {max_dim} (see --max-dim, FT_MAX_DIM)")

    by_coords = {}
    for v in (*enumerate_v0(cs), *enumerate_v1(cs), *enumerate_v2(cs)):
        by_coords.setdefault(v.coords, v)
    vertices = [by_coords[c] for c in sorted(by_coords)]
    _log.info(f"enumerated {len(vertices)} vertices of P_R for {cs.instance.elements}, "
              f"{sum(v.degenerate for v in vertices)} degenerate")
    return vertices

def check_vertex(cs:ConstraintSystem, v:Vertex) -> bool:
    '''Feasible, and the active rows have full rank 2m: `v` really is a vertex.'''
    rows = [cs.halfspaces[j].coeffs for j in sorted(v.active)]
    return is_feasible(cs, v.coords) and rank_exact(rows) == cs.dimension
