"""n-Schur functions as exact ratios of finite determinants.

For block size n the variables h[i,j,k] fill n x n matrices H_k, which are
laid along block diagonals of a lower block-Toeplitz operator: block row L
and block column M hold H_{L-M}, with H_k = 0 for k < 0.  An index sequence
S selects columns of this operator; scalar entry (l, m) of the selected
matrix is

    h[1 + (l mod n), 1 + (s_m mod n), floor(l/n) - floor(s_m/n)]

with Euclidean mod and floor, zero whenever the degree index is negative.
The associated function is det(M_S restricted to nN x nN) / det(H_0)^N for
any truncation level N whose block count covers the prefix of S; the value
is independent of N under cross-multiplication of the resulting quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .determinant import det_fraction_free
from .errors import DenominatorNotUnit, TruncationTooSmall
from .partitions import MayaSequence
from .rings import Polynomial, RationalFunction, hvar

# (row component, column component, degree) of entry (l, m) when column m
# reads basis index s.
def entry_indices(l: int, s: int, n: int) -> tuple:
    return (1 + l % n, 1 + s % n, l // n - s // n)


def matrix_entry(l: int, m: int, S: MayaSequence, n: int) -> Polynomial:
    """The single-variable polynomial at position (l, m), or zero."""
    if l < 0 or m < 0:
        raise IndexError("matrix positions are indexed from 0")
    i, j, k = entry_indices(l, S.entry(m), n)
    if k < 0:
        return Polynomial.zero()
    return Polynomial.variable(hvar(i, j, k))


@dataclass(frozen=True)
class TruncatedMatrix:
    """The top-left nN x nN block of the column selection given by S."""

    S: MayaSequence
    n: int
    N: int
    entries: tuple

    @property
    def size(self) -> int:
        return self.n * self.N

    def rows(self) -> list:
        return [list(row) for row in self.entries]

    def to_json(self) -> list:
        """JSON array of polynomial JSON, row major."""
        return [[p.to_json_dict() for p in row] for row in self.entries]


def truncated_matrix(S: MayaSequence, n: int, N: int) -> TruncatedMatrix:
    if N < S.min_truncation(n):
        raise TruncationTooSmall(
            f"truncation {N} < minimal level {S.min_truncation(n)} for prefix {S}"
        )
    size = n * N
    entries = tuple(
        tuple(matrix_entry(l, m, S, n) for m in range(size)) for l in range(size)
    )
    return TruncatedMatrix(S, n, N, entries)


def h0_matrix(n: int) -> list:
    return [[Polynomial.variable(hvar(i, j, 0)) for j in range(1, n + 1)] for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def h0_det(n: int) -> Polynomial:
    """det(H_0) as a polynomial in the h[i,j,0]."""
    return det_fraction_free(h0_matrix(n))


@lru_cache(maxsize=None)
def n_schur_at(S: MayaSequence, n: int, N: int) -> RationalFunction:
    """The function of S at an explicit truncation level N."""
    if n < 1:
        raise ValueError(f"block size must be >= 1, got {n}")
    matrix = truncated_matrix(S, n, N)
    if matrix.size == 0:
        return RationalFunction(1)
    numerator = det_fraction_free(matrix.rows())
    return RationalFunction(numerator, h0_det(n) ** N)


def n_schur(S: MayaSequence, n: int) -> RationalFunction:
    """The n-Schur function of S, computed at the minimal truncation."""
    return n_schur_at(S, n, S.min_truncation(n))


def specialize_h0_identity(f: RationalFunction, n: int) -> Polynomial:
    """Set the constant block H_0 to the identity matrix.

    Under h[i,i,0] -> 1 and h[i,j,0] -> 0 the denominator of any function
    produced by n_schur collapses to 1; anything else signals an indexing
    bug and raises DenominatorNotUnit.  Returns the specialized numerator.
    """
    assignment = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assignment[hvar(i, j, 0)] = 1 if i == j else 0
    den = f.den.specialize(assignment)
    if den != Polynomial.one():
        raise DenominatorNotUnit(f"denominator specializes to {den}, not 1")
    return f.num.specialize(assignment)


def n_schur_eval(S: MayaSequence, series):
    """The value of the function of S on a truncated coefficient series.

    ``series`` provides ``n``, ``is_numeric`` and ``entry(i, j, k)``
    (coefficients beyond its cutoff are zero, i.e. the series is treated as
    a polynomial in z).  Returns a Fraction for numeric series and a
    RationalFunction otherwise.  The caller is responsible for the numeric
    det H_0 != 0 guard.
    """
    n = series.n
    N = S.min_truncation(n)
    if N == 0:
        return Fraction(1) if series.is_numeric else RationalFunction(1)
    size = n * N
    rows = []
    for l in range(size):
        row = []
        for m in range(size):
            i, j, k = entry_indices(l, S.entry(m), n)
            row.append(series.entry(i, j, k))
        rows.append(row)
    numerator = det_fraction_free(rows)
    h0 = det_fraction_free(
        [[series.entry(i, j, 0) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )
    if series.is_numeric:
        return Fraction(numerator) / Fraction(h0) ** N
    return RationalFunction(numerator, h0**N)
