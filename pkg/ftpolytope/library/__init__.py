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
This module implements the algorithms on P_R, building atop `ftpolytope.core`: exact vertex enumeration, the
1-skeleton and its metrics, brute-force oracles, and the verifiers which check each structural statement about P_R
against an enumeration.

The main entry point is `analyze`, which runs the whole pipeline on one instance and returns a `PolytopeReport`. For
many instances, `check_instance` together with `run_batch` does the same with a fixed amount of concurrency.

The implementation lives in private submodules, all of whose contents are exposed here, as well as the enum `FTArgs`
for use in scripts which call this library.

Checkout the docstrings of all these things to get started -- or read the example scripts!
'''

########################################################################################################################

from dataclasses import dataclass
import logging

from ..core import (ExactPartitionInstance, ConstraintSystem, DerivedConstants, build_constraints, oddify,
                    translate_positive)
from ._vertices import Vertex, enumerate_all, __all__ as _v_all__
from ._skeleton import PolytopeGraph, build_adjacency, graph_metrics, monotone_metrics, __all__ as _sk_all__
from ._analysis import (LemmaReport, PartitionCertificate, exact_partition_oracle, run_all_verifiers,
                        __all__ as _an_all__)
from ._batch import __all__ as _b_all__
from ._script_args import __all__ as _s_a_all__
from ._vertices import *
from ._skeleton import *
from ._analysis import *
from ._batch import *
from ._script_args import *
# The contents of the submodules are exposed via this module, but separate files for better focus when reading

__all__ = ['PolytopeReport', 'analyze'] + _v_all__ + _sk_all__ + _an_all__ + _b_all__ + _s_a_all__

_log = logging.getLogger(__name__)

########################################################################################################################

@dataclass(frozen=True)
class PolytopeReport:
    '''
    Everything `analyze` learns about one instance. `raw` is the input as given; `instance` is what was actually
    analyzed, after translation by `shift` and, when preprocessing was asked for, oddifying by `added`.
    '''
    raw: ExactPartitionInstance
    instance: ExactPartitionInstance
    shift: int
    added: int
    constants: DerivedConstants
    constraints: ConstraintSystem
    vertices: tuple[Vertex, ...]
    graph: PolytopeGraph
    diameter: int
    eccentricities: tuple[int, ...]
    monotone_diameter: int
    monotone_distances: tuple[int, ...]
    lemmas: tuple[LemmaReport, ...]
    certificate: PartitionCertificate | None

    @property
    def degenerate(self) -> list[Vertex]:
        return [v for v in self.vertices if v.degenerate]

    @property
    def passed(self) -> bool:
        return all(report.holds for report in self.lemmas)


def analyze(raw:ExactPartitionInstance, preprocess:str=None, max_dim:int=None) -> PolytopeReport:
    '''
    translate -> optional oddify ("up" or "down", see `core.oddify`) -> constants -> enumerate -> adjacency ->
    metrics -> every verifier. The partition certificate refers to the raw instance's indices, which translation
    and oddifying leave unchanged.
    '''
    inst, shift = translate_positive(raw)
    added = 0
    if preprocess is not None:
        if preprocess not in ('up', 'down'):
            raise ValueError(f"{preprocess=} must be 'up' or 'down'")
        inst, added = oddify(inst, step=1 if preprocess == 'up' else -1)
    if shift or added:
        _log.info(f"analyzing {inst.elements} (from {raw.elements}: shift {shift}, added {added})")

    cs = build_constraints(inst)
    vertices = enumerate_all(cs, max_dim)
    graph = build_adjacency(vertices, cs)
    diameter, ecc = graph_metrics(graph)
    monotone_diameter, monotone = monotone_metrics(graph)
    lemmas = run_all_verifiers(inst, vertices, graph)
    return PolytopeReport(raw=raw, instance=inst, shift=shift, added=added, constants=cs.constants, constraints=cs,
                          vertices=tuple(vertices), graph=graph, diameter=diameter, eccentricities=ecc,
                          monotone_diameter=monotone_diameter, monotone_distances=monotone, lemmas=tuple(lemmas),
                          certificate=exact_partition_oracle(raw))
