"""Time-variable specializations and tau-quotient expansions.

The bridge to the KP hierarchy: coefficients H_k of a truncated series are
substituted for the variables h[i,j,k], giving every n-Schur function its
dependence on whatever parameters the series carries.  The classical case
is block size 1 with H_k the degree-k coefficient of exp(sum t_i z^i),
under which the functions become the Schur polynomials in the time
variables; the Jacobi-Trudi determinant over the same coefficients serves
as an independent oracle for that limit.
"""

from __future__ import annotations

from fractions import Fraction

from .determinant import det_cofactor
from .errors import InsufficientDegree
from .grassmann import SeriesMatrix
from .partitions import (
    MayaSequence,
    check_partition,
    parse_maya,
    parse_partition,
    partition_text,
)
from .rings import Polynomial, RationalFunction, hvar, tvar
from .schur import n_schur


def symbolic_times(count: int) -> list:
    """The time variables t[1] .. t[count] as polynomials."""
    return [Polynomial.variable(tvar(m)) for m in range(1, count + 1)]


def complete_homogeneous(times, K: int) -> list:
    """Coefficients p_0 .. p_K of exp(sum_i times[i-1] z^i).

    Computed by the derivative recurrence k p_k = sum_{i<=k} i t_i p_{k-i};
    times beyond the supplied list are zero.  Entries are polynomials when
    the times are symbolic, exact rationals otherwise.
    """
    if K < 0:
        raise ValueError(f"degree cutoff must be >= 0, got {K}")
    times = list(times)
    numeric = all(isinstance(x, (int, Fraction)) for x in times)
    p = [Fraction(1) if numeric else Polynomial.one()]
    for k in range(1, K + 1):
        acc = None
        for i in range(1, k + 1):
            t_i = times[i - 1] if i <= len(times) else 0
            if not t_i:
                continue
            term = t_i * p[k - i] * i
            acc = term if acc is None else acc + term
        if acc is None:
            p.append(Fraction(0) if numeric else Polynomial.zero())
        else:
            p.append(acc * Fraction(1, k))
    return p


def exponential_series(times, K: int) -> SeriesMatrix:
    """The block-size-1 series whose H_k is the degree-k coefficient of exp(sum t_i z^i)."""
    return SeriesMatrix(1, K, tuple(((p,),) for p in complete_homogeneous(times, K)))


def jacobi_trudi(parts, hs) -> Polynomial:
    """det(h_{parts[i] - i + j}) over 1 <= i, j <= len(parts), with h_k = 0 for k < 0.

    Independent oracle for the block-size-1 specialization: evaluated by
    cofactor expansion, never by the fraction-free path it is checked
    against.  Requires hs[0] == 1 and hs long enough for every index used.
    """
    parts = check_partition(parts)
    hs = list(hs)
    if not hs or hs[0] != 1:
        raise ValueError("the coefficient sequence must start with h_0 = 1")
    ell = len(parts)
    if ell == 0:
        return Polynomial.one()
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            k = parts[i - 1] - i + j
            if k < 0:
                row.append(0)
            elif k >= len(hs):
                raise ValueError(f"coefficient h_{k} not supplied")
            else:
                row.append(hs[k])
        rows.append(row)
    det = det_cofactor(rows)
    return det if isinstance(det, Polynomial) else Polynomial.constant(det)


def schur_polynomial(parts, times=None) -> Polynomial:
    """The Schur polynomial of the partition in the time variables.

    With ``times`` unset, symbolic variables t[1] .. t[|parts|] are used;
    homogeneous of weight |parts| under the grading wt(t[m]) = m.
    """
    parts = check_partition(parts)
    weight = sum(parts)
    if times is None:
        times = symbolic_times(weight)
    times = list(times)
    if len(times) < weight:
        raise ValueError(f"need at least {weight} time values, got {len(times)}")
    return jacobi_trudi(parts, complete_homogeneous(times, weight))


def n_schur_of_series(S: MayaSequence, series: SeriesMatrix) -> RationalFunction:
    """The function of S with the series coefficients substituted in.

    Degree sufficiency is checked structurally: the variables actually
    appearing in the function are scanned, and the first one whose z-degree
    exceeds the cutoff raises InsufficientDegree.
    """
    f = n_schur(S, series.n)
    needed = sorted({v[3] for v in f.num.variables() | f.den.variables()})
    for k in needed:
        if k > series.K:
            raise InsufficientDegree(k)
    assignment = {}
    for k in needed:
        for i in range(1, series.n + 1):
            for j in range(1, series.n + 1):
                assignment[hvar(i, j, k)] = series.entry(i, j, k)
    return f.substitute(assignment)


def tau_quotient_expansion(series: SeriesMatrix, coeffs) -> RationalFunction:
    """sum over the coefficient map of coeffs[S] * (function of S at the series).

    The terms are accumulated over a common denominator, in increasing
    (weight, partition) order, so the result is deterministic.  This is the
    quotient tau/tau_0; any overall tau-function factor is up to the caller,
    and the value shares the projective scale of the supplied coefficients.
    """
    total = RationalFunction(0)
    for S in sorted(coeffs, key=lambda s: (s.weight(), s.to_partition())):
        value = coeffs[S]
        if not value:
            continue
        total = total + n_schur_of_series(S, series) * value
    return total


def coeffs_from_json(data: dict, max_denominator=None) -> dict:
    """Parse the coefficient-map JSON: {"terms": [{"partition": "2,1", "coeff": "3/2"}]}.

    Each term may carry either a "partition" or a "maya" key; repeated
    indices accumulate.
    """
    out = {}
    for term in data["terms"]:
        if "partition" in term:
            S = MayaSequence.from_partition(parse_partition(term["partition"]))
        elif "maya" in term:
            S = parse_maya(term["maya"])
        else:
            raise ValueError(f"coefficient term needs 'partition' or 'maya': {term}")
        value = Fraction(term["coeff"])
        if max_denominator is not None and value.denominator > max_denominator:
            raise ValueError(
                f"denominator of {term['coeff']!r} exceeds the allowed bound {max_denominator}"
            )
        out[S] = out.get(S, Fraction(0)) + value
    return out


def coeffs_to_json(coeffs) -> dict:
    items = sorted(coeffs.items(), key=lambda kv: (kv[0].weight(), kv[0].to_partition()))
    return {
        "terms": [
            {"partition": partition_text(S.to_partition()), "coeff": str(c)}
            for S, c in items
        ]
    }
