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
Brute-force oracles and verifiers. Each verifier takes an instance and the output of `enumerate_all` and returns a
`LemmaReport` whose `witnesses` are the vertices contradicting the statement; an empty list means it holds. A failing
report means either an enumeration bug or a genuine mathematical surprise.

The oracles are naive (exhaustive subsets, exhaustive 0/1 points, every basis of the constraint matrix)
and have explicit scale caps which raise ScaleCap rather than silently truncating.

`check_instance` bundles the whole battery for one instance, for use with `run_batch`.
'''

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
import logging
import random
from typing import Sequence

from ..core import (ExactPartitionInstance, ConstraintSystem, FTError, FTStatus, Point, build_constraints,
                    derive_constants, is_feasible, new_instance, oddify, slack, translate_positive)
from ._rational import solve_exact
from ._skeleton import PolytopeGraph, build_adjacency
from ._vertices import Vertex, VertexClass, enumerate_all, vertex_at

__all__ = ['PartitionOracleCap', 'ILP2OracleCap', 'BasisOracleCap', 'PartitionCertificate', 'Lemma', 'LemmaReport',
           'is_exact_partition', 'exact_partition_oracle', 'ilp2_bruteforce', 'construct_degenerate_vertex',
           'predicted_degenerate_pairs', 'predict_degenerate_count', 'oracle_enumerate_basis',
           'verify_simplicity_lemma', 'verify_m_minus_1_lemma', 'verify_v0_partition_lemma',
           'verify_slack_observation', 'verify_theorem', 'verify_ones_bound', 'verify_class_characterization',
           'verify_degenerate_shape', 'verify_degrees', 'verify_preprocessing', 'verify_formulation',
           'run_all_verifiers', 'check_instance', 'random_instance', 'planted_instance']

_log = logging.getLogger(__name__)

PartitionOracleCap = 24
ILP2OracleCap = 20
BasisOracleCap = 6

########################################################################################################################

@dataclass(frozen=True)
class PartitionCertificate:
    '''An m-subset (0-based indices) whose sum equals that of its complement.'''
    subset: tuple[int, ...]
    sum_left: int
    sum_right: int


class Lemma(Enum):
    '''The statements checked by the verifiers, in report order.'''
    Simplicity        = "no half-max element => P_R is simple"
    MMinusOne         = "a V1 vertex with |I_1| = m-1 is not degenerate"
    V0Partition       = "a V0 vertex with |I_1| = m encodes an exact partition"
    SlackObservation  = "a V0 vertex with |I_1| = m has slack exactly eps on K1 and K2"
    Theorem           = "degenerate vertices are exactly the (partition, half-max) constructions"
    OnesBound         = "m-1 <= |I_1| on V1 and V2, |I_1| <= m everywhere"
    ClassCharacter    = "V0 off both knapsacks, V1 on at least one, V2 on both"
    DegenerateShape   = "degenerate vertices have one coordinate 2eps/(2M+s_max) at a half-max index"
    Degrees           = "degree is 2m exactly at non-degenerate vertices"
    Preprocessing     = "odd s_max leaves no degenerate vertex and keeps the partition answer"
    Formulation       = "ILP2 optimum is m iff an exact partition exists"


@dataclass(frozen=True)
class LemmaReport:
    lemma: Lemma
    elements: tuple[int, ...]
    witnesses: tuple[Vertex, ...] = ()
    applicable: bool = True
    detail: str = ''

    @property
    def holds(self) -> bool:
        return not self.witnesses

def _report(lemma, inst, witnesses=(), **kwargs) -> LemmaReport:
    report = LemmaReport(lemma, inst.elements, tuple(witnesses), **kwargs)
    if not report.holds:
        _log.warning(f"{lemma.name} fails on {inst.elements}: {len(report.witnesses)} witnesses")
    return report

########################################################################################################################
# Oracles

def _cap(inst_or_dim, cap:int, what:str):
    dim = inst_or_dim if isinstance(inst_or_dim, int) else inst_or_dim.size
    if dim > cap:
        raise FTError(FTStatus.ScaleCap, f"2m={dim} exceeds the {what} cap of {cap}")

def is_exact_partition(inst:ExactPartitionInstance, subset:Sequence[int]) -> bool:
    members = set(subset)
    if len(members) != inst.m or not all(0 <= i < inst.size for i in members):
        return False
    return 2 * sum(inst.elements[i] for i in members) == inst.total

def exact_partition_oracle(inst:ExactPartitionInstance) -> PartitionCertificate | None:
    '''Exhaustive search over all C(2m, m) subsets; the lexicographically first certificate, or None.'''
    _cap(inst, PartitionOracleCap, "partition oracle")
    S = inst.total
    if S % 2:
        return None
    for subset in combinations(range(inst.size), inst.m):
        left = sum(inst.elements[i] for i in subset)
        if 2 * left == S:
            return PartitionCertificate(subset, left, S - left)
    return None

def ilp2_bruteforce(inst:ExactPartitionInstance) -> tuple[int, Point]:
    '''
    Scan every 0/1 point for ILP2: maximize Σ x_i subject to (K1), (K2). Returns (optimum, witness), the witness being
    the first optimal point when points are listed with 1 before 0 in each coordinate.
    '''
    _cap(inst, ILP2OracleCap, "ILP2 scan")
    a, R1, b, R2 = build_constraints(inst).integer_knapsacks()
    best, witness = -1, None
    for x in product((1, 0), repeat=inst.size):
        count = sum(x)
        if count <= best:
            continue
        if sum(ai for ai, xi in zip(a, x) if xi) <= R1 and sum(bi for bi, xi in zip(b, x) if xi) <= R2:
            best, witness = count, x
    return best, Point.of(witness)

def oracle_enumerate_basis(cs:ConstraintSystem) -> list[Point]:
    '''
    Ground truth vertex set: solve every 2m-subset of the 4m+2 constraints as equalities, keep the feasible unique
    solutions. C(4m+2, 2m) bases, hence the small cap.
    '''
    n = cs.dimension
    _cap(n, BasisOracleCap, "basis oracle")
    found = set()
    for basis in combinations(cs.halfspaces, n):
        x = solve_exact([h.coeffs for h in basis], [h.rhs for h in basis])
        if x is not None and is_feasible(cs, x):
            found.add(x)
    return [Point(x) for x in sorted(found)]

########################################################################################################################
# The closed-form degenerate vertex

def construct_degenerate_vertex(inst:ExactPartitionInstance, subset:Sequence[int], i:int) -> Vertex:
    '''
    Given an exact partition `subset` (|subset| = m) and an index i outside it with s_i = s_max/2, the point with ones
    on `subset`, 2ε/(2M + s_max) at i and zeros elsewhere. Both knapsacks are tight there, so it lies on 2m+1
    constraints; this is checked, and a failure raises InternalError.
    '''
    subset = tuple(sorted(subset))
    if not is_exact_partition(inst, subset):
        raise FTError(FTStatus.NotAPartition, f"{subset} in {inst.elements}")
    if not 0 <= i < inst.size:
        raise FTError(FTStatus.DimensionMismatch, f"index {i} outside range({inst.size})")
    if i in subset:
        raise FTError(FTStatus.IndexInSubset, f"{i} in {subset}")
    if 2 * inst.elements[i] != inst.s_max:
        raise FTError(FTStatus.NotHalfMax, f"s_{i+1} = {inst.elements[i]}, s_max = {inst.s_max}")

    cs = build_constraints(inst)
    coords = [Fraction(int(k in subset)) for k in range(inst.size)]
    coords[i] = cs.constants.degenerate_coordinate
    v = vertex_at(cs, coords)
    if slack(cs, coords, cs.K1) != 0 or slack(cs, coords, cs.K2) != 0 or not is_feasible(cs, coords) \
                                     or len(v.active) != inst.size + 1:
        raise FTError(FTStatus.InternalError, f"construction at {coords} is not a degenerate vertex")
    return v

def predicted_degenerate_pairs(inst:ExactPartitionInstance) -> list[tuple[tuple[int, ...], int]]:
    '''Every (valid m-subset T, half-max index i not in T).'''
    _cap(inst, PartitionOracleCap, "partition oracle")
    halves = inst.half_max_indices()
    if not halves or inst.total % 2:
        return []
    pairs = []
    for subset in combinations(range(inst.size), inst.m):
        if 2 * sum(inst.elements[k] for k in subset) == inst.total:
            pairs.extend((subset, i) for i in halves if i not in subset)
    return pairs

def predict_degenerate_count(inst:ExactPartitionInstance) -> int:
    '''Σ over valid m-subsets T of the number of half-max elements outside T.'''
    return len(predicted_degenerate_pairs(inst))

########################################################################################################################
# Verifiers

def _with_ones(vertices, vclass, count):
    return [v for v in vertices if v.vclass is vclass and len(v.i1) == count]

def verify_simplicity_lemma(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    halves = inst.half_max_indices()
    if halves:
        return _report(Lemma.Simplicity, inst, applicable=False,
                       detail=f"s_i = s_max/2 at i = {', '.join(str(i+1) for i in halves)}")
    return _report(Lemma.Simplicity, inst, (v for v in vertices if v.degenerate))

def verify_m_minus_1_lemma(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    return _report(Lemma.MMinusOne, inst,
                   (v for v in _with_ones(vertices, VertexClass.V1, inst.m - 1) if v.degenerate))

def verify_v0_partition_lemma(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    return _report(Lemma.V0Partition, inst,
                   (v for v in _with_ones(vertices, VertexClass.V0, inst.m)
                      if v.alpha != 0 or not is_exact_partition(inst, v.i1)))

def verify_slack_observation(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    cs = build_constraints(inst)
    eps = cs.constants.epsilon
    return _report(Lemma.SlackObservation, inst,
                   (v for v in _with_ones(vertices, VertexClass.V0, inst.m)
                      if slack(cs, v.coords, cs.K1) != eps or slack(cs, v.coords, cs.K2) != eps))

def verify_theorem(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    '''
    Both directions: every predicted construction is an enumerated degenerate vertex, and every enumerated degenerate
    vertex is a predicted construction. The second direction isn't stated as a theorem but follows from the case
    analysis behind it.
    '''
    constructed = {}
    for subset, i in predicted_degenerate_pairs(inst):
        v = construct_degenerate_vertex(inst, subset, i)
        constructed[v.coords] = v
    found = {v.coords: v for v in vertices if v.degenerate}
    missing = [v for coords, v in constructed.items() if coords not in found]
    unexplained = [v for coords, v in found.items() if coords not in constructed]
    return _report(Lemma.Theorem, inst, missing + unexplained,
                   detail=f"{len(constructed)} predicted, {len(found)} found")

def verify_ones_bound(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    m = inst.m
    return _report(Lemma.OnesBound, inst,
                   (v for v in vertices
                      if len(v.i1) > m or (v.vclass is not VertexClass.V0 and len(v.i1) < m - 1)))

def verify_class_characterization(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    cs = build_constraints(inst)
    simple = not inst.half_max_indices()
    def broken(v):
        on = (cs.K1 in v.active) + (cs.K2 in v.active)
        if v.vclass is VertexClass.V0:
            return on != 0
        if v.vclass is VertexClass.V1:
            return on == 0 or (simple and on == 2)
        return on != 2
    return _report(Lemma.ClassCharacter, inst, filter(broken, vertices))

def verify_degenerate_shape(inst:ExactPartitionInstance, vertices:Sequence[Vertex]) -> LemmaReport:
    consts = derive_constants(inst)
    def broken(v):
        if len(v.if_) != 1 or len(v.i1) != inst.m:
            return True
        (j,) = v.if_
        return v.coords[j] != consts.degenerate_coordinate or 2 * inst.elements[j] != consts.s_max
    return _report(Lemma.DegenerateShape, inst, (v for v in vertices if v.degenerate and broken(v)))

def verify_degrees(inst:ExactPartitionInstance, graph:PolytopeGraph) -> LemmaReport:
    n = inst.size
    return _report(Lemma.Degrees, inst,
                   (v for v, deg in zip(graph.vertices, graph.degrees)
                      if (deg <= n if v.degenerate else deg != n)))

def _partition_vertices(inst, vertices):
    return [v for v in _with_ones(vertices, VertexClass.V0, inst.m) if v.alpha == 0]

def verify_preprocessing(inst:ExactPartitionInstance, max_dim:int=None) -> LemmaReport:
    '''
    Oddify `inst` and check that the result has no degenerate vertex and the same partition answer. Witnesses are the
    degenerate vertices of the oddified polytope, or, if the answers differ, the partition vertices of whichever
    polytope has them.
    '''
    odd, added = oddify(inst)
    odd_vertices = enumerate_all(build_constraints(odd), max_dim)
    witnesses = [v for v in odd_vertices if v.degenerate]
    before, after = exact_partition_oracle(inst), exact_partition_oracle(odd)
    if (before is None) != (after is None):
        witnesses += _partition_vertices(odd, odd_vertices) if after \
                     else _partition_vertices(inst, enumerate_all(build_constraints(inst), max_dim))
    return _report(Lemma.Preprocessing, inst, witnesses, detail=f"added {added}")

def verify_formulation(inst:ExactPartitionInstance) -> LemmaReport:
    '''ILP2 optimum = m iff the partition oracle finds a certificate. Witness: the 0/1 point that disagrees.'''
    optimum, argmax = ilp2_bruteforce(inst)
    certificate = exact_partition_oracle(inst)
    cs = build_constraints(inst)
    witnesses = []
    if optimum == inst.m and certificate is None:
        witnesses.append(vertex_at(cs, argmax.coords))
    elif optimum != inst.m and certificate is not None:
        witnesses.append(vertex_at(cs, (int(k in certificate.subset) for k in range(inst.size))))
    return _report(Lemma.Formulation, inst, witnesses, detail=f"optimum {optimum}")

def run_all_verifiers(inst:ExactPartitionInstance, vertices:Sequence[Vertex],
                      graph:PolytopeGraph=None) -> list[LemmaReport]:
    '''The statements about one enumerated polytope, in `Lemma` order (Degrees only when a graph is given).'''
    reports = [verify_simplicity_lemma(inst, vertices),
               verify_m_minus_1_lemma(inst, vertices),
               verify_v0_partition_lemma(inst, vertices),
               verify_slack_observation(inst, vertices),
               verify_theorem(inst, vertices),
               verify_ones_bound(inst, vertices),
               verify_class_characterization(inst, vertices),
               verify_degenerate_shape(inst, vertices)]
    if graph is not None:
        reports.append(verify_degrees(inst, graph))
    return reports

def check_instance(raw:ExactPartitionInstance, max_dim:int=None) -> tuple[LemmaReport, ...]:
    '''
    Every verifier on one instance (translated to positive first), plus the preprocessing and formulation checks.
    A pure function of its arguments, so batches may run it concurrently.
    '''
    inst, _ = translate_positive(raw)
    cs = build_constraints(inst)
    vertices = enumerate_all(cs, max_dim)
    reports = run_all_verifiers(inst, vertices, build_adjacency(vertices, cs))
    reports.append(verify_preprocessing(inst, max_dim))
    reports.append(verify_formulation(inst))
    return tuple(reports)

########################################################################################################################
# Instance generators for batch runs. Pass a seeded `random.Random` for reproducibility.

def random_instance(rng:random.Random, size:int, low:int=1, high:int=20) -> ExactPartitionInstance:
    return new_instance(rng.randint(low, high) for _ in range(size))

def planted_instance(rng:random.Random, size:int, high:int=20) -> ExactPartitionInstance:
    '''
    An instance with both ingredients of degeneracy: one half holds 2h, h and m-2 values in [1, 2h]; the other half
    mirrors it. So s_max = 2h is even, h = s_max/2 is present, and the halves form an exact partition.
    '''
    m = size // 2
    if size % 2 or m < 2:
        raise ValueError(f"planting needs an even size of at least 4, got {size}")
    h = rng.randint(1, max(1, high // 2))
    half = [2 * h, h] + [rng.randint(1, 2 * h) for _ in range(m - 2)]
    elements = half + half
    rng.shuffle(elements)
    return new_instance(elements)
