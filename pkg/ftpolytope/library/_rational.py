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
An implementation detail: exact Gaussian elimination over `Fraction`s, for the basis-enumeration oracle and for the
rank check on active constraint rows. Matrices are small (at most 6x6 for the oracle), so plain lists suffice.
'''

from fractions import Fraction
from typing import Sequence

__all__ = ['solve_exact', 'rank_exact']

########################################################################################################################

def _row_echelon(rows:list[list[Fraction]], ncols:int) -> int:
    '''Reduce `rows` to row echelon form in place over the first `ncols` columns, returning the rank.'''
    piv_r = 0
    for piv_c in range(ncols):
        for i in range(piv_r, len(rows)):
            if rows[i][piv_c] != 0:
                break
        else:
            continue # free column
        rows[piv_r], rows[i] = rows[i], rows[piv_r]
        fp = rows[piv_r][piv_c]
        for r in range(piv_r + 1, len(rows)):
            fr = rows[r][piv_c]
            if fr == 0:
                continue
            f = fr / fp
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_r])]
        piv_r += 1
        if piv_r == len(rows):
            break
    return piv_r

def rank_exact(matrix:Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    return _row_echelon(rows, len(rows[0]))

def solve_exact(A:Sequence[Sequence], b:Sequence) -> tuple[Fraction, ...] | None:
    '''
    Solve the square system Ax = b exactly. Returns None when A is singular (no unique solution), which is the common
    case during basis enumeration and so isn't an exception.
    '''
    n = len(A)
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    if _row_echelon(rows, n) < n:
        return None
    # back substitution; the echelon form of a nonsingular square matrix is upper triangular
    x = [Fraction(0)] * n
    for r in reversed(range(n)):
        s = rows[r][n] - sum(rows[r][c] * x[c] for c in range(r + 1, n))
        x[r] = s / rows[r][r]
    return tuple(x)
