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
The base layer: an Exact Partition instance, the Frieze-Teng constants derived from it, and the exact halfspace
system cutting the unit 2m-cube with the two knapsack constraints (K1) and (K2). Everything else in the package is
built atop the types here.

All arithmetic is exact: integers and `fractions.Fraction`. Nothing in this module (or the library) ever touches a
float, since degeneracy is a question of exact equality and ε = 1/(2M) makes tightness razor-thin.

Also exposed here are `FTStatus`, an enum naming each class of failure, and `FTError`, the one `Exception` raised by
the package, which carries an `FTStatus`.

Indices in the Python API are 0-based. Reports (see `constraint_label`) are 1-based, like s_1..s_2m on paper.
'''

__all__ = ['FTStatus', 'FTError', 'ExactPartitionInstance', 'DerivedConstants', 'ConstraintKind', 'Halfspace',
           'ConstraintSystem', 'Point', 'new_instance', 'translate_positive', 'oddify', 'derive_constants',
           'build_constraints', 'slack', 'is_feasible', 'active_set', 'constraint_label', 'recover_instance',
           'parse_instance_text']

########################################################################################################################

from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
import json
import math
import re
from typing import Iterable, Sequence

########################################################################################################################

class FTStatus(Enum):
    '''
    Enum naming each class of failure. `FTError.status` is always one of these.

    The first group are input problems, the second are scale caps, the third are violated preconditions of the
    analysis constructions, and the last is reserved for "this should never happen" postcondition failures.
    '''
    Empty             = "no elements"
    OddCount          = "odd element count"
    NotAnInteger      = "element is not an integer"
    NotPositive       = "element below 1"
    ParseError        = "unparsable instance"
    NotFriezeTeng     = "not a Frieze-Teng constraint system"

    DimensionMismatch = "point dimension differs from system dimension"
    DimensionCap      = "dimension exceeds enumeration cap"
    ScaleCap          = "instance exceeds oracle cap"

    NotAPartition     = "subset is not an exact partition"
    NotHalfMax        = "element is not s_max/2"
    IndexInSubset     = "index lies inside the subset"

    Disconnected      = "skeleton graph is disconnected"
    InternalError     = auto()

class FTError(Exception):
    def __init__(self, status:FTStatus, message:str=''):
        super().__init__(f"{status.name}: {message}" if message else status.name)
        self.status = status

########################################################################################################################

@dataclass(frozen=True)
class ExactPartitionInstance:
    '''
    An ordered multiset s_1..s_2m. Indices, not values, identify elements (duplicates are normal: {3,3,4,2}).

    Construct with `new_instance`, which validates. Positivity is *not* required here; `translate_positive` arranges it,
    and the operations that need it (`oddify`, `derive_constants`) check it.
    '''
    elements: tuple[int, ...]

    def __post_init__(self):
        _check_count(self.elements)

    @property
    def size(self) -> int:
        '''2m'''
        return len(self.elements)

    @property
    def m(self) -> int:
        return len(self.elements) // 2

    @property
    def total(self) -> int:
        '''S'''
        return sum(self.elements)

    @property
    def s_max(self) -> int:
        return max(self.elements)

    def is_positive(self) -> bool:
        return min(self.elements) >= 1

    def half_max_indices(self) -> tuple[int, ...]:
        '''Indices i with s_i = s_max/2, the necessary ingredient of a degenerate vertex.'''
        s_max = self.s_max
        return tuple(i for i, s in enumerate(self.elements) if 2 * s == s_max)

    def shifted(self, delta:int) -> 'ExactPartitionInstance':
        return ExactPartitionInstance(tuple(s + delta for s in self.elements))


@dataclass(frozen=True)
class DerivedConstants:
    '''
    S, s_max, M = S+1, ε = 1/(2M), d_i = s_max - s_i, and the right-hand sides of (K1) and (K2):

        k1_rhs = S/2 + mM + ε
        k2_rhs = (Σ d_i)/2 + mM + ε
    '''
    S: int
    s_max: int
    M: int
    epsilon: Fraction
    d: tuple[int, ...]
    k1_rhs: Fraction
    k2_rhs: Fraction

    @property
    def d_sum(self) -> int:
        return sum(self.d)

    @property
    def degenerate_coordinate(self) -> Fraction:
        '''2ε/(2M + s_max): the fractional coordinate of every degenerate vertex'''
        return 2 * self.epsilon / (2 * self.M + self.s_max)


class ConstraintKind(Enum):
    LowerBound = "x>=0"
    UpperBound = "x<=1"
    K1         = "K1"
    K2         = "K2"


@dataclass(frozen=True)
class Halfspace:
    '''
    One constraint `coeffs · x <= rhs`. Lower bounds x_i >= 0 are stored in this same form, as -x_i <= 0, so the slack
    `rhs - coeffs · x` is uniformly "how far from tight" for every row.
    '''
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    kind: ConstraintKind
    index: int | None = None # the variable of a box constraint

    def label(self) -> str:
        if self.kind is ConstraintKind.LowerBound:
            return f"x_{self.index+1}>=0"
        if self.kind is ConstraintKind.UpperBound:
            return f"x_{self.index+1}<=1"
        return self.kind.value


@dataclass(frozen=True)
class ConstraintSystem:
    '''
    The 4m+2 halfspaces defining P_R, in the canonical order

        LowerBound(0..2m-1), UpperBound(0..2m-1), K1, K2

    so that a constraint is identified by its position in `halfspaces`; active sets are sets of positions, and they
    are reproducible across runs. Use `lower`, `upper`, `K1`, `K2` rather than computing positions by hand.
    '''
    instance: ExactPartitionInstance
    constants: DerivedConstants
    halfspaces: tuple[Halfspace, ...]

    @property
    def dimension(self) -> int:
        return self.instance.size

    def lower(self, i:int) -> int:
        return i

    def upper(self, i:int) -> int:
        return self.dimension + i

    @property
    def K1(self) -> int:
        return 2 * self.dimension

    @property
    def K2(self) -> int:
        return 2 * self.dimension + 1

    def integer_knapsacks(self) -> tuple[tuple[int, ...], int, tuple[int, ...], int]:
        '''
        (K1) and (K2) scaled by a common denominator into pure integers: returns (a, R1, b, R2) such that
        `a · x <= R1` and `b · x <= R2` are exactly (K1) and (K2). Hot loops compare integers, never Fractions.
        '''
        k1, k2 = self.halfspaces[self.K1], self.halfspaces[self.K2]
        scale = math.lcm(*(q.denominator for q in (*k1.coeffs, k1.rhs, *k2.coeffs, k2.rhs)))
        a = tuple(int(c * scale) for c in k1.coeffs)
        b = tuple(int(c * scale) for c in k2.coeffs)
        return a, int(k1.rhs * scale), b, int(k2.rhs * scale)


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values:Iterable) -> 'Point':
        '''Coerce ints, Fractions or "p/q" strings. Floats are refused.'''
        coords = []
        for v in values:
            if isinstance(v, float):
                raise TypeError(f"refusing float coordinate {v!r}, use a Fraction or 'p/q' string")
            coords.append(Fraction(v))
        return cls(tuple(coords))

    def __len__(self):
        return len(self.coords)

########################################################################################################################

def _check_count(elements:Sequence):
    if not elements:
        raise FTError(FTStatus.Empty, "an instance needs at least two elements")
    if len(elements) % 2:
        raise FTError(FTStatus.OddCount, f"got {len(elements)} elements, Exact Partition needs an even count")

def _require_positive(inst:ExactPartitionInstance):
    if not inst.is_positive():
        raise FTError(FTStatus.NotPositive, f"min element {min(inst.elements)} < 1, translate_positive first")

def new_instance(elements:Iterable) -> ExactPartitionInstance:
    '''Validate and build an instance. Does not translate: see `translate_positive`.'''
    elements = tuple(elements)
    for s in elements:
        # bool is an int subclass, but True is not an element
        if not isinstance(s, int) or isinstance(s, bool):
            raise FTError(FTStatus.NotAnInteger, f"{s!r}")
    _check_count(elements)
    return ExactPartitionInstance(elements)

def translate_positive(inst:ExactPartitionInstance) -> tuple[ExactPartitionInstance, int]:
    '''
    Shift every element by the minimal amount making all of them >= 1; returns (instance, shift). Equal-size subsets
    shift equally, so the Exact Partition answer is preserved.
    '''
    low = min(inst.elements)
    if low >= 1:
        return inst, 0
    shift = 1 - low
    return inst.shifted(shift), shift

def oddify(inst:ExactPartitionInstance, step:int=1) -> tuple[ExactPartitionInstance, int]:
    '''
    Make s_max odd, so that no element can equal s_max/2 and P_R is simple. Returns (instance, added).

    With the default `step=1` every element is incremented when s_max is even. `step=-1` decrements instead, which is
    how {3,3,4,2} becomes {2,2,3,1}; that is only allowed when every element is at least 2. Either way the largest
    element stays largest and the partition answer is unchanged.
    '''
    _require_positive(inst)
    if step not in (1, -1):
        raise ValueError(f"{step=} must be +1 or -1")
    if inst.s_max % 2:
        return inst, 0
    if step == -1 and min(inst.elements) < 2:
        raise FTError(FTStatus.NotPositive, f"cannot subtract one from {inst.elements} and stay positive")
    return inst.shifted(step), step

def derive_constants(inst:ExactPartitionInstance) -> DerivedConstants:
    _require_positive(inst)
    S, s_max, m = inst.total, inst.s_max, inst.m
    M = S + 1
    epsilon = Fraction(1, 2 * M)
    d = tuple(s_max - s for s in inst.elements)
    return DerivedConstants(S=S, s_max=s_max, M=M, epsilon=epsilon, d=d,
                            k1_rhs=Fraction(S, 2) + m * M + epsilon,
                            k2_rhs=Fraction(sum(d), 2) + m * M + epsilon)

def build_constraints(inst:ExactPartitionInstance, consts:DerivedConstants=None) -> ConstraintSystem:
    if consts is None:
        consts = derive_constants(inst)
    n = inst.size
    zero, one = Fraction(0), Fraction(1)
    unit = lambda i, v: tuple(v if k == i else zero for k in range(n))

    rows = [Halfspace(unit(i, -one), zero, ConstraintKind.LowerBound, i) for i in range(n)]
    rows += [Halfspace(unit(i, one), one, ConstraintKind.UpperBound, i) for i in range(n)]
    rows.append(Halfspace(tuple(Fraction(consts.M + s) for s in inst.elements), consts.k1_rhs, ConstraintKind.K1))
    rows.append(Halfspace(tuple(Fraction(consts.M + d) for d in consts.d), consts.k2_rhs, ConstraintKind.K2))
    return ConstraintSystem(inst, consts, tuple(rows))

########################################################################################################################

def _coords_of(cs:ConstraintSystem, p) -> tuple[Fraction, ...]:
    coords = p.coords if isinstance(p, Point) else tuple(p)
    if len(coords) != cs.dimension:
        raise FTError(FTStatus.DimensionMismatch, f"point has {len(coords)} coordinates, system has {cs.dimension}")
    return coords

def _slack(h:Halfspace, coords) -> Fraction:
    return h.rhs - sum(c * x for c, x in zip(h.coeffs, coords) if c)

def slack(cs:ConstraintSystem, p, which:int) -> Fraction:
    '''
    rhs - coeffs · p for the constraint at position `which` (see `ConstraintSystem.K1` etc). Negative means violated,
    zero means active. For a lower bound this is simply p_i.
    '''
    return _slack(cs.halfspaces[which], _coords_of(cs, p))

def is_feasible(cs:ConstraintSystem, p) -> bool:
    coords = _coords_of(cs, p)
    return all(_slack(h, coords) >= 0 for h in cs.halfspaces)

def active_set(cs:ConstraintSystem, p) -> frozenset[int]:
    '''Positions of the constraints tight at `p`.'''
    coords = _coords_of(cs, p)
    return frozenset(j for j, h in enumerate(cs.halfspaces) if _slack(h, coords) == 0)

def constraint_label(cs:ConstraintSystem, which:int) -> str:
    return cs.halfspaces[which].label()

########################################################################################################################

def recover_instance(halfspaces:Sequence[Halfspace]) -> ExactPartitionInstance:
    '''
    Given the rows of a Frieze-Teng system in any order (e.g. read back from a `.ine` file), rebuild the instance that
    produced it. The K1 coefficients are M + s_i and sum to 2mM + S = (2m+1)M - 1, which pins down M and then every
    s_i. The rebuilt system must reproduce the given rows exactly, or this raises NotFriezeTeng.
    '''
    knapsacks = [h for h in halfspaces if h.kind in (ConstraintKind.K1, ConstraintKind.K2)]
    boxes = {(h.kind, h.index) for h in halfspaces if h.kind not in (ConstraintKind.K1, ConstraintKind.K2)}
    if len(knapsacks) != 2:
        raise FTError(FTStatus.NotFriezeTeng, f"expected two knapsack rows, found {len(knapsacks)}")
    n = len(knapsacks[0].coeffs)
    if len(boxes) != 2 * n or len(halfspaces) != 2 * n + 2:
        raise FTError(FTStatus.NotFriezeTeng, f"expected {2*n} distinct box rows in dimension {n}")

    given = {(h.coeffs, h.rhs) for h in halfspaces}
    for k1 in knapsacks: # the file need not list K1 first
        M, rem = divmod(sum(k1.coeffs) + 1, n + 1)
        if rem or M.denominator != 1:
            continue
        elements = [c - M for c in k1.coeffs]
        if any(s.denominator != 1 or s < 1 for s in elements):
            continue
        try:
            inst = new_instance(int(s) for s in elements)
        except FTError:
            continue
        rebuilt = build_constraints(inst)
        if {(h.coeffs, h.rhs) for h in rebuilt.halfspaces} == given:
            return inst
    raise FTError(FTStatus.NotFriezeTeng, "knapsack rows do not match any positive instance")

_SEPARATORS = re.compile(r'[,\s]+')

def parse_instance_text(text:str) -> ExactPartitionInstance:
    '''
    Accepted forms:
        one line of whitespace- or comma-separated integers ('#' lines are comments)
        a JSON object {"elements": [int, ...]}
        a cdd H-representation previously written by `ftpolytope.cdd.format_ine`
    '''
    stripped = text.strip()
    if stripped.startswith('{'):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as err:
            raise FTError(FTStatus.ParseError, f"bad JSON: {err}") from None
        if not isinstance(data, dict) or not isinstance(data.get('elements'), list):
            raise FTError(FTStatus.ParseError, 'JSON input must be an object {"elements": [int, ...]}')
        return new_instance(data['elements'])

    if 'H-representation' in stripped:
        from .cdd import parse_ine # cdd builds on this module
        return parse_ine(stripped).instance

    lines = [line.strip() for line in stripped.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if len(lines) > 1:
        raise FTError(FTStatus.ParseError, f"expected one line of integers, found {len(lines)} lines")
    tokens = [t for t in _SEPARATORS.split(lines[0]) if t] if lines else []
    try:
        values = [int(t) for t in tokens]
    except ValueError as err:
        raise FTError(FTStatus.ParseError, f"{err}") from None
    return new_instance(values)
