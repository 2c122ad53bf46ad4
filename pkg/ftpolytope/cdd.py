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
Reading and writing the cdd interchange formats, so that P_R can be cross-checked with external polyhedral tools
(cddlib, lrslib, polymake all read these).

    H-representation (.ine): one row per halfspace a·x <= β, written `β -a_1 ... -a_2m`, i.e. β - a·x >= 0
    V-representation (.ext): one row per vertex, written `1 v_1 ... v_2m`

The number type is always `rational`, since the knapsack right-hand sides are never integral. Every number is written
in lowest terms as "p/q", or "p" when q = 1.

`parse_ine` only accepts systems this package could have written: it recovers the instance from the knapsack rows and
rebuilds the system from it, so a round trip yields the canonical constraint order whatever the file's row order.
'''

from fractions import Fraction
from typing import Iterable, Sequence

from .core import (ConstraintKind, ConstraintSystem, FTError, FTStatus, Halfspace, Point, build_constraints,
                   recover_instance)

__all__ = ['format_rational', 'format_ine', 'format_ext', 'parse_ine', 'parse_ext']

########################################################################################################################

def format_rational(x) -> str:
    # Fraction normalizes to lowest terms with a positive denominator, and prints "p" when q == 1
    return str(Fraction(x))

def _block(kind:str, rows:Sequence[Sequence], comment:str|None) -> str:
    lines = [f"* {line}" for line in comment.splitlines()] if comment else []
    lines += [kind, 'begin', f"{len(rows)} {len(rows[0])} rational"]
    lines += [' '.join(format_rational(x) for x in row) for row in rows]
    lines.append('end')
    return '\n'.join(lines) + '\n'

def format_ine(cs:ConstraintSystem, comment:str=None) -> str:
    rows = [(h.rhs, *(-c for c in h.coeffs)) for h in cs.halfspaces]
    return _block('H-representation', rows, comment)

def format_ext(vertices:Iterable, comment:str=None) -> str:
    '''`vertices` are `Vertex`es, `Point`s or plain coordinate sequences.'''
    rows = []
    for v in vertices:
        coords = v.coords if hasattr(v, 'coords') else tuple(v)
        rows.append((1, *coords))
    if not rows:
        raise ValueError("a V-representation needs at least one vertex")
    return _block('V-representation', rows, comment)

########################################################################################################################

def _rows(text:str, kind:str) -> list[list[Fraction]]:
    '''The numeric rows between `begin` and `end`, after checking the header.'''
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('*')]
    try:
        start = lines.index('begin')
        stop = lines.index('end', start)
    except ValueError:
        raise FTError(FTStatus.ParseError, "missing begin/end") from None
    preamble = lines[:start]
    if kind not in preamble:
        raise FTError(FTStatus.ParseError, f"not a {kind}")
    if any(line.startswith('linearity') for line in preamble):
        raise FTError(FTStatus.NotFriezeTeng, "equality rows (linearity) are not part of P_R")

    header = lines[start + 1].split() if start + 1 < stop else []
    if len(header) != 3 or header[2] not in ('rational', 'integer'):
        raise FTError(FTStatus.ParseError, f"bad size line {' '.join(header)!r}")
    try:
        nrows, ncols = int(header[0]), int(header[1])
        rows = [[Fraction(t) for t in line.split()] for line in lines[start + 2:stop]]
    except ValueError as err:
        raise FTError(FTStatus.ParseError, f"{err}") from None
    if len(rows) != nrows or any(len(row) != ncols for row in rows):
        raise FTError(FTStatus.ParseError, f"expected {nrows} rows of {ncols} numbers")
    return rows

def _classify(row:list[Fraction], knapsacks_seen:int) -> Halfspace:
    rhs, coeffs = row[0], tuple(-c for c in row[1:])
    nonzero = [i for i, c in enumerate(coeffs) if c]
    if len(nonzero) == 1:
        (i,) = nonzero
        if coeffs[i] == -1 and rhs == 0:
            return Halfspace(coeffs, rhs, ConstraintKind.LowerBound, i)
        if coeffs[i] == 1 and rhs == 1:
            return Halfspace(coeffs, rhs, ConstraintKind.UpperBound, i)
    # which knapsack is which gets settled by recover_instance
    return Halfspace(coeffs, rhs, ConstraintKind.K1 if knapsacks_seen == 0 else ConstraintKind.K2)

def parse_ine(text:str) -> ConstraintSystem:
    '''Parse an H-representation and return the canonical system it describes, or raise NotFriezeTeng.'''
    halfspaces = []
    for row in _rows(text, 'H-representation'):
        seen = sum(h.kind in (ConstraintKind.K1, ConstraintKind.K2) for h in halfspaces)
        halfspaces.append(_classify(row, seen))
    return build_constraints(recover_instance(halfspaces))

def parse_ext(text:str) -> list[Point]:
    points = []
    for row in _rows(text, 'V-representation'):
        if row[0] != 1:
            raise FTError(FTStatus.ParseError, f"ray or unnormalized row {[format_rational(x) for x in row]}")
        points.append(Point(tuple(row[1:])))
    return points
