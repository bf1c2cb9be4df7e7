"""Finite-rank model of the grassmannian of vector-valued Fourier series.

Basis vectors e_i (i in Z) stand for z^floor(i/n) times the unit coordinate
vector (i mod n) + 1; the nonnegative indices span the reference subspace
H_+.  A point W is stored as a finite perturbation of H_+: its first r
basis columns are supported on rows -d .. r-1 and every later column is the
matching basis vector e_m, so all Pluecker data of W is carried by one
(d+r) x r rational matrix of full column rank.

A multiplication operator g = sum_k H_k z^k (coefficients either the
canonical variables h[i,j,k] or exact rationals, truncated at degree K) has
matrix entries given by the same index formula as the Schur-function
matrices.  Determinants of its action on a frame are evaluated on
truncations whose size is a multiple of n, where truncating commutes with
all the products involved; the value stabilizes once the truncation clears
the band of the perturbation, which is certified by comparing two
consecutive block truncations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .determinant import det_fraction_free
from .errors import NotStabilized, SingularConstantTerm
from .partitions import MayaSequence, partition_text
from .rings import Polynomial, RationalFunction, hvar
from .schur import entry_indices, n_schur_eval


def _parse_fraction(text, max_denominator=None) -> Fraction:
    value = Fraction(text)
    if max_denominator is not None and value.denominator > max_denominator:
        raise ValueError(
            f"denominator of {text!r} exceeds the allowed bound {max_denominator}"
        )
    return value


def _rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][j]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                factor = m[i][j]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class FinitePoint:
    """A point of the grassmannian with finitely supported perturbation.

    ``rows`` holds the (d+r) x r coefficient matrix; storage row 0 is basis
    row -d.  Column m < r is the basis vector w_m; for m >= r, w_m = e_m.
    """

    n: int
    d: int
    r: int
    rows: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"block size must be >= 1, got {self.n}")
        if self.d < 0 or self.r < 0:
            raise ValueError("depth and width must be >= 0")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if len(rows) != self.d + self.r or any(len(row) != self.r for row in rows):
            raise ValueError(
                f"coefficient block must be {self.d + self.r} x {self.r}"
            )
        object.__setattr__(self, "rows", rows)
        if self.r and _rank(rows) != self.r:
            raise ValueError("coefficient block does not have full column rank")

    @classmethod
    def inclusion(cls, n: int, r: int = 0) -> "FinitePoint":
        """The reference subspace H_+ itself (identity perturbation block)."""
        eye = tuple(
            tuple(Fraction(int(i == m)) for m in range(r)) for i in range(r)
        )
        return cls(n, 0, r, eye)

    @classmethod
    def coordinate(cls, S: MayaSequence, n: int) -> "FinitePoint":
        """The coordinate point whose basis is {e_{s_0}, e_{s_1}, ...}."""
        prefix = S.prefix
        r = len(prefix)
        d = max(0, -min(prefix, default=0))
        rows = tuple(
            tuple(Fraction(int(i == s)) for s in prefix) for i in range(-d, r)
        )
        return cls(n, d, r, rows)

    def basis_entry(self, i: int, m: int) -> Fraction:
        """Coefficient of e_i in the basis column w_m (any i >= -d, m >= 0)."""
        if m < self.r:
            if -self.d <= i < self.r:
                return self.rows[i + self.d][m]
            return Fraction(0)
        return Fraction(int(i == m))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "B": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict, max_denominator=None) -> "FinitePoint":
        rows = tuple(
            tuple(_parse_fraction(x, max_denominator) for x in row)
            for row in data["B"]
        )
        return cls(int(data["n"]), int(data["d"]), int(data["r"]), rows)


@dataclass(frozen=True)
class SeriesMatrix:
    """A z-truncated matrix series sum_{k=0..K} H_k z^k.

    Coefficient entries are either exact rationals (numeric mode) or
    polynomials, in particular the canonical variables h[i,j,k] produced by
    ``symbolic``.  Coefficients beyond the cutoff are zero, i.e. the series
    is handled as a matrix polynomial in z.
    """

    n: int
    K: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"block size must be >= 1, got {self.n}")
        if self.K < 0:
            raise ValueError(f"degree cutoff must be >= 0, got {self.K}")
        coeffs = tuple(tuple(tuple(row) for row in mat) for mat in self.coeffs)
        if len(coeffs) != self.K + 1 or any(
            len(mat) != self.n or any(len(row) != self.n for row in mat)
            for mat in coeffs
        ):
            raise ValueError(f"need {self.K + 1} coefficient matrices of size {self.n}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def symbolic(cls, n: int, K: int) -> "SeriesMatrix":
        coeffs = tuple(
            tuple(
                tuple(Polynomial.variable(hvar(i, j, k)) for j in range(1, n + 1))
                for i in range(1, n + 1)
            )
            for k in range(K + 1)
        )
        return cls(n, K, coeffs)

    @classmethod
    def numeric(cls, n: int, K: int, values) -> "SeriesMatrix":
        coeffs = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in mat) for mat in values
        )
        return cls(n, K, coeffs)

    @property
    def is_numeric(self) -> bool:
        return all(
            isinstance(x, Fraction) for mat in self.coeffs for row in mat for x in row
        )

    def entry(self, i: int, j: int, k: int):
        """Coefficient (i, j) of H_k, 1-based; zero outside 0 <= k <= K."""
        if 0 <= k <= self.K:
            return self.coeffs[k][i - 1][j - 1]
        return 0

    def h0_det(self):
        return det_fraction_free(
            [[self.entry(i, j, 0) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]
        )

    def to_json_dict(self) -> dict:
        if not self.is_numeric:
            raise ValueError("only numeric series serialize to the JSON form")
        return {
            "n": self.n,
            "K": self.K,
            "H": [[[str(x) for x in row] for row in mat] for mat in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict, max_denominator=None) -> "SeriesMatrix":
        coeffs = tuple(
            tuple(
                tuple(_parse_fraction(x, max_denominator) for x in row) for row in mat
            )
            for mat in data["H"]
        )
        return cls(int(data["n"]), int(data["K"]), coeffs)


# ---------------------------------------------------------------------------
# Pluecker coordinates

def pluecker_coord(W: FinitePoint, S: MayaSequence) -> Fraction:
    """The minor of the basis block on the rows selected by S.

    Sequences reaching outside the stored band have coordinate zero.  Rows
    are taken in increasing order; the identity tail contributes a unit
    block, so only the r x r minor of the perturbation block remains.
    """
    prefix = S.prefix
    if len(prefix) > W.r or any(s < -W.d for s in prefix):
        return Fraction(0)
    selected = list(prefix) + list(range(len(prefix), W.r))
    minor = [[W.rows[i + W.d][m] for m in range(W.r)] for i in selected]
    return Fraction(det_fraction_free(minor))


def pluecker_coordinates(W: FinitePoint) -> dict:
    """All nonzero coordinates, keyed by sequence, in candidate-row order."""
    out = {}
    for combo in itertools.combinations(range(-W.d, W.r), W.r):
        S = MayaSequence.from_prefix(combo)
        value = pluecker_coord(W, S)
        if value:
            out[S] = value
    return out


def pluecker_support(W: FinitePoint) -> list:
    """The sequences with nonzero coordinate, in the deterministic order."""
    return list(pluecker_coordinates(W))


# ---------------------------------------------------------------------------
# the multiplication operator and its frame determinant

def operator_block(g: SeriesMatrix, row_indices, col_indices) -> list:
    """The matrix of multiplication by g on the chosen basis index ranges."""
    return [
        [g.entry(*entry_indices(l, i, g.n)) for i in col_indices]
        for l in row_indices
    ]


def action_matrix(g: SeriesMatrix, T: int) -> list:
    """The T x T matrix of g on the nonnegative basis indices."""
    if T < 1:
        raise ValueError(f"truncation must be >= 1, got {T}")
    return operator_block(g, range(T), range(T))


def plus_block(g: SeriesMatrix, T: int) -> list:
    """The compression of g to H_+ (identical to the action on H_+ here).

    Multiplication by a nonnegative-power series never produces negative
    indices from nonnegative ones, so the off-block is zero and the
    compression is just the truncated action matrix.  In numeric mode it is
    invertible iff det H_0 != 0.
    """
    if g.is_numeric and not g.h0_det():
        raise SingularConstantTerm("det H_0 = 0, the compression is singular")
    return action_matrix(g, T)


def _frame_block(g: SeriesMatrix, W: FinitePoint, T: int) -> list:
    """The T x T top block of (matrix of g) * (matrix of w).

    For column m >= r the product column is just g applied to e_m; because T
    is a multiple of n, rows below T never feed back into rows above, so the
    truncated product is exact.
    """
    rows = []
    band = range(-W.d, W.r)
    for l in range(T):
        gl = {i: g.entry(*entry_indices(l, i, g.n)) for i in band}
        row = []
        for m in range(T):
            if m < W.r:
                acc = 0
                for i in band:
                    e = gl[i]
                    if e:
                        b = W.rows[i + W.d][m]
                        if b:
                            acc = acc + e * b
                row.append(acc)
            else:
                row.append(g.entry(*entry_indices(l, m, g.n)))
        rows.append(row)
    return rows


def _frame_det_at(g: SeriesMatrix, W: FinitePoint, blocks: int):
    """det of the T x T block of g*w*a^{-1} at T = blocks * n.

    On block-boundary truncations both truncating the product and inverting
    the compression commute, so the determinant splits as
    det((g*w)_T) / det(a_T) with det(a_T) = det(H_0)^blocks.
    """
    T = blocks * g.n
    numerator = det_fraction_free(_frame_block(g, W, T))
    h0 = g.h0_det()
    if g.is_numeric:
        return Fraction(numerator) / Fraction(h0) ** blocks
    return RationalFunction(numerator, h0**blocks)


def stabilization_blocks(g: SeriesMatrix, W: FinitePoint) -> int:
    """Block count past which the frame determinant is constant."""
    n = g.n
    return -(-(W.d + W.r) // n) + g.K + 1


def frame_det(g: SeriesMatrix, W: FinitePoint, blocks=None):
    """The determinant of the compressed frame action of g on W.

    Truncations are counted in blocks of n rows (the block boundaries are
    where truncation is exact).  With ``blocks`` unset, the determinant is
    evaluated at the band bound and once more one block later; the two must
    agree exactly, otherwise NotStabilized is raised.  Returns
    (value, T_used).  With ``blocks`` given, that single truncation is
    evaluated without certification.
    """
    if g.n != W.n:
        raise ValueError(f"block sizes differ: operator {g.n}, point {W.n}")
    if g.is_numeric and not g.h0_det():
        raise SingularConstantTerm("det H_0 = 0, the frame action is undefined")
    if blocks is not None:
        if blocks < 1:
            raise ValueError(f"block count must be >= 1, got {blocks}")
        return _frame_det_at(g, W, blocks), blocks * g.n
    bound = stabilization_blocks(g, W)
    value = _frame_det_at(g, W, bound)
    check = _frame_det_at(g, W, bound + 1)
    if value != check:
        raise NotStabilized(
            f"truncations {bound} and {bound + 1} blocks disagree: {value} vs {check}"
        )
    return value, bound * g.n


# ---------------------------------------------------------------------------
# the expansion identity

def pluecker_expansion(g: SeriesMatrix, W: FinitePoint):
    """sum over the support of W of <S|W> times the function of S at g."""
    if g.n != W.n:
        raise ValueError(f"block sizes differ: operator {g.n}, point {W.n}")
    if g.is_numeric and not g.h0_det():
        raise SingularConstantTerm("det H_0 = 0, the expansion is undefined")
    total = None
    for S, coord in pluecker_coordinates(W).items():
        term = n_schur_eval(S, g) * coord
        total = term if total is None else total + term
    if total is None:
        raise ValueError("point has empty support (zero perturbation block)")
    return total


@dataclass(frozen=True)
class ExpansionReport:
    """Both sides of the expansion identity for one operator and point."""

    lhs: object
    rhs: object
    support: tuple
    T_used: int
    stabilized: bool
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "support": [partition_text(S.to_partition()) for S in self.support],
            "support_size": len(self.support),
            "T_used": self.T_used,
            "stabilized": self.stabilized,
            "pass": self.passed,
        }


_SYMBOLIC_GATE = 2  # symbolic determinants grow quickly; keep d, r, K tiny


def verify_expansion(g: SeriesMatrix, W: FinitePoint) -> ExpansionReport:
    """Compare the frame determinant against the Pluecker expansion.

    Numeric series of any supported size are verified exactly.  Fully
    symbolic verification is gated to d, r <= 2 and K <= 2.
    """
    if not g.is_numeric and (
        W.d > _SYMBOLIC_GATE or W.r > _SYMBOLIC_GATE or g.K > _SYMBOLIC_GATE
    ):
        raise ValueError(
            f"symbolic verification is gated to d, r, K <= {_SYMBOLIC_GATE}"
        )
    lhs, T_used = frame_det(g, W)
    rhs = pluecker_expansion(g, W)
    support = tuple(pluecker_support(W))
    return ExpansionReport(
        lhs=lhs,
        rhs=rhs,
        support=support,
        T_used=T_used,
        stabilized=True,
        passed=lhs == rhs,
    )
