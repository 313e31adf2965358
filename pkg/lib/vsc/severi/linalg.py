#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Exact linear algebra over the rationals.

Matrices are lists of rows, entries are Fractions (ints are accepted on input).
Everything is Gauss-Jordan elimination without pivoting strategy: all arithmetic is exact,
so the first nonzero entry in a column is as good a pivot as any other.
"""
from fractions import Fraction

from vsc.severi.common import GenericityError, SeveriError


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """
    Reduced row echelon form.

    @param rows: list of rows
    @param ncols: number of columns (needed when rows is empty)

    @return: (reduced rows, list of pivot column indices)
    """
    mat = _copy(rows)
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow == len(mat):
            break
        sel = next((i for i in range(prow, len(mat)) if mat[i][col] != 0), None)
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        piv = mat[prow][col]
        if piv != 1:
            mat[prow] = [x / piv for x in mat[prow]]
        pivrow = mat[prow]
        for i, row in enumerate(mat):
            if i != prow and row[col] != 0:
                factor = row[col]
                mat[i] = [a - factor * b for a, b in zip(row, pivrow)]
        pivots.append(col)
        prow += 1
    return mat, pivots


def rank(rows, ncols=None):
    """Exact rank"""
    return len(rref(rows, ncols=ncols)[1])


def nullspace(rows, ncols=None):
    """
    Basis of {x : rows x = 0}, one vector per free column.
    """
    if ncols is None:
        ncols = len(rows[0])
    mat, pivots = rref(rows, ncols=ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -mat[prow][fcol]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """
    Unique solution x of rows x = rhs for a square nonsingular system.

    @raise GenericityError: the system is singular
    """
    size = len(rows)
    if any(len(row) != size for row in rows) or len(rhs) != size:
        raise SeveriError("solve needs a square system, got %s rows and rhs of length %s", size, len(rhs))
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    mat, pivots = rref(augmented, ncols=size + 1)
    if pivots != list(range(size)):
        raise GenericityError("singular system (pivots %s)", pivots)
    return [mat[i][size] for i in range(size)]


def inverse(rows):
    """
    Inverse of a square matrix.

    @raise GenericityError: the matrix is singular
    """
    size = len(rows)
    augmented = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(rows)]
    mat, pivots = rref(augmented, ncols=2 * size)
    left = [p for p in pivots if p < size]
    if len(left) != size:
        raise GenericityError("singular matrix of size %s (rank %s)", size, len(left))
    return [row[size:] for row in mat[:size]]


def identity(size):
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(rows, vec):
    return [dot(row, vec) for row in rows]


def matmul(a, b):
    cols = transpose(b)
    return [[dot(row, col) for col in cols] for row in a]


def sparsify(rows):
    """Keep only the nonzero entries: list of [(column, value), ...] per row"""
    return [[(j, x) for j, x in enumerate(row) if x != 0] for row in rows]


def sparse_matvec(srows, vec):
    return [sum((x * vec[j] for j, x in srow), Fraction(0)) for srow in srows]


def proportional(u, v):
    """
    True iff all 2x2 minors of (u, v) vanish.

    A zero vector is proportional to anything.
    """
    if len(u) != len(v):
        return False
    pivot = next((k for k, x in enumerate(u) if x != 0), None)
    if pivot is None:
        return True
    return all(u[pivot] * b == v[pivot] * a for a, b in zip(u, v))


def ratio(u, v):
    """Scalar t with v = t u, None if u is zero or v is not a multiple of u"""
    pivot = next((k for k, x in enumerate(u) if x != 0), None)
    if pivot is None or not proportional(u, v):
        return None
    return Fraction(v[pivot]) / u[pivot]


def is_zero(vec):
    return all(x == 0 for x in vec)
