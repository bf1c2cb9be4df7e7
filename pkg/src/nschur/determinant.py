"""Exact determinants by fraction-free elimination, with a cofactor oracle.

Entries may be Polynomial, Fraction or int; all that is required is exact
ring arithmetic and an exact ``/`` (Polynomial raises NonExactDivision when
a division is not exact, which inside Bareiss elimination would signal a
bug rather than a user error).  Division-free cofactor expansion is kept as
an independent cross-check.
"""

from __future__ import annotations

from .rings import Polynomial


def _term_count(entry) -> int:
    return len(entry) if isinstance(entry, Polynomial) else 1


def det_fraction_free(rows):
    """Determinant by Bareiss one-step fraction-free elimination.

    After stage k every active entry is a (k+1)x(k+1) minor of the input, so
    dividing by the previous pivot is exact.  Among the nonzero pivot
    candidates in a column the one with the fewest terms is chosen (ties to
    the smallest row index), which keeps intermediate polynomials small; row
    swaps only flip the sign.  The empty determinant is 1.
    """
    m = [list(row) for row in rows]
    size = len(m)
    if size == 0:
        return 1
    for row in m:
        if len(row) != size:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(size - 1):
        pivot = None
        best = None
        for i in range(k, size):
            entry = m[i][k]
            if entry:
                cost = _term_count(entry)
                if best is None or cost < best:
                    pivot, best = i, cost
        if pivot is None:
            return m[k][k] * 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) / prev
        prev = pkk
    det = m[size - 1][size - 1]
    return -det if sign < 0 else det


def det_cofactor(rows):
    """Determinant by cofactor expansion along the first row.

    Exponential; used only as an independent oracle on small matrices.
    """
    size = len(rows)
    if size == 0:
        return 1
    for row in rows:
        if len(row) != size:
            raise ValueError("matrix is not square")
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [[row[c] for c in range(size) if c != j] for row in rows[1:]]
        term = entry * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] * 0
    return total
