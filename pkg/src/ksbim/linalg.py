"""Fraction-free (Bareiss) elimination.

Two flavours are needed: rank of rational matrices (Hom-space nullities at a
specialisation) and inversion of matrices over the Laurent ring whose
determinant is a unit (Steinberg Gram matrices).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .laurent import LaurentPoly, exact_divide


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        m = lcm(*(v.denominator for v in row)) if row else 1
        ints = [int(v * m) for v in row]
        if any(ints):
            out.append(ints)
    return out


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    """Exact rank of a rational matrix given as a list of rows."""
    a = _integer_rows(rows)
    if not a:
        return 0
    ncols = len(a[0]) if ncols is None else ncols
    nrows = len(a)
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[col]
            if f:
                a[i] = [(p * row[j] - f * prow[j]) // prev for j in range(ncols)]
            else:
                a[i] = [(p * row[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
    return r


def nullity(rows: Sequence[Sequence], ncols: int) -> int:
    return ncols - rank(rows, ncols)


def laurent_inverse(matrix: Sequence[Sequence[LaurentPoly]]) -> tuple[LaurentPoly, list[list[LaurentPoly]]]:
    """Determinant and inverse of a square matrix over the Laurent ring.

    Fraction-free Gauss-Jordan on ``[A | I]`` ends with ``[d I | d A^-1]``
    where ``d = +-det(A)``; the inverse is then recovered by exact division,
    which succeeds only when the determinant is a unit.  Raises
    ``InexactDivision`` otherwise.
    """
    n = len(matrix)
    rk = matrix[0][0].rank
    zero = LaurentPoly.zero(rk)
    one = LaurentPoly.one(rk)
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    width = 2 * n
    prev = one
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return zero, []
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            new = []
            for j in range(width):
                v = p * a[i][j]
                if not f.is_zero() and not a[k][j].is_zero():
                    v = v - f * a[k][j]
                new.append(exact_divide(v, prev) if prev != one else v)
            a[i] = new
        prev = p
    d = prev
    det = d if sign == 1 else -d
    inv = [[exact_divide(a[i][n + j], d) for j in range(n)] for i in range(n)]
    return det, inv


def mat_mul(a, b, zero):
    """Product of two matrices whose entries support ``+`` and ``*``."""
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                x = row[k]
                y = b[k][j]
                if x and y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out
