"""Exact sparse polynomial arithmetic over the rationals in indexed variables.

Two families of variables exist: matrix coefficients ``h[i,j,k]`` (row i,
column j, z-degree k, all of i, j >= 1 and k >= 0) and time variables
``t[m]`` (m >= 1).  A variable is a plain tuple, ``("h", i, j, k)`` or
``("t", m)``.  The variable order is fixed once and for all: every
h-variable precedes every t-variable, h-variables sort by (k, i, j)
ascending, t-variables by m.

A monomial is a tuple of (variable, exponent) pairs with positive
exponents, sorted by the variable order.  A Polynomial stores a tuple of
(monomial, coefficient) pairs in descending graded-lexicographic term
order, so equal polynomials have identical storage and every rendering is
deterministic.  Coefficients are exact: plain ints, or fractions.Fraction
when non-integral.  All values are immutable after construction and every
operation returns a fresh object, so sharing across threads is safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import MissingAssignment, NonExactDivision, ZeroPolynomial

Variable = tuple
Coeff = "int | Fraction"


def hvar(i: int, j: int, k: int) -> Variable:
    """The variable h[i,j,k]."""
    if i < 1 or j < 1:
        raise ValueError(f"h-variable indices must be >= 1, got ({i},{j})")
    if k < 0:
        raise ValueError(f"h-variable z-degree must be >= 0, got {k}")
    return ("h", i, j, k)


def tvar(m: int) -> Variable:
    """The time variable t[m]."""
    if m < 1:
        raise ValueError(f"t-variable index must be >= 1, got {m}")
    return ("t", m)


def variable_key(v: Variable):
    """Sort key realizing the fixed variable order."""
    if v[0] == "h":
        return (0, v[3], v[1], v[2])
    return (1, v[1], 0, 0)


def variable_weight(v: Variable, n: int) -> int:
    """Grading: h[i,j,k] has weight k*n + i - j, t[m] has weight m."""
    if v[0] == "h":
        return v[3] * n + v[1] - v[2]
    return v[1]


def variable_text(v: Variable) -> str:
    if v[0] == "h":
        return f"h[{v[1]},{v[2]},{v[3]}]"
    return f"t[{v[1]}]"


def variable_latex(v: Variable) -> str:
    if v[0] == "h":
        return f"h_{{{v[1]},{v[2]},{v[3]}}}"
    return f"t_{{{v[1]}}}"


def _check_variable(v) -> Variable:
    if not isinstance(v, tuple) or not v:
        raise ValueError(f"not a variable: {v!r}")
    if v[0] == "h" and len(v) == 4:
        return hvar(v[1], v[2], v[3])
    if v[0] == "t" and len(v) == 2:
        return tvar(v[1])
    raise ValueError(f"not a variable: {v!r}")


# ---------------------------------------------------------------------------
# monomials: tuples of (variable, exponent), sorted by the variable order

def _mono_key(mono):
    # Ascending sort by this key lists terms in descending graded-lex order.
    return (-sum(e for _, e in mono), tuple((variable_key(v), -e) for v, e in mono))


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda it: variable_key(it[0])))


def _mono_divides(a, b) -> bool:
    """Whether monomial a divides monomial b."""
    need = dict(b)
    for v, e in a:
        if need.get(v, 0) < e:
            return False
    return True


def _mono_div(b, a):
    """The quotient monomial b / a; assumes a divides b."""
    d = dict(b)
    for v, e in a:
        rest = d[v] - e
        if rest:
            d[v] = rest
        else:
            del d[v]
    return tuple(sorted(d.items(), key=lambda it: variable_key(it[0])))


def _mono_text(mono, power: str, render) -> str:
    return "*".join(
        render(v) + (power.format(e) if e > 1 else "") for v, e in mono
    )


def _norm_coeff(c):
    """Keep integral coefficients as plain int (hash/eq-compatible with Fraction)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coeff_str(c) -> str:
    return str(c)


def _coeff_latex(c) -> str:
    f = Fraction(c)
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return f"{sign}\\frac{{{abs(f.numerator)}}}{{{f.denominator}}}"


class Polynomial:
    """A sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        d = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if coeff:
                d[mono] = d.get(mono, 0) + coeff
        cleaned = tuple(
            (m, _norm_coeff(c)) for m, c in sorted(d.items(), key=lambda it: _mono_key(it[0])) if c
        )
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(): Fraction(c)} if c else {})

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        return cls({((v, 1),): 1})

    # -- introspection ------------------------------------------------------

    @property
    def terms(self):
        """The stored (monomial, coefficient) pairs, leading term first."""
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not self._terms[0][0])

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return Fraction(self._terms[0][1])

    def leading_coefficient(self):
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._terms[0][1]

    def variables(self) -> set:
        return {v for mono, _ in self._terms for v, _ in mono}

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono, _ in self._terms)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no content")
        nums = 0
        dens = 1
        for _, c in self._terms:
            f = Fraction(c)
            nums = gcd(nums, abs(f.numerator))
            dens = lcm(dens, f.denominator)
        return Fraction(nums, dens)

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for m, c in other._terms:
            d[m] = d.get(m, 0) + c
        return Polynomial(d)

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial()
        object.__setattr__(p, "_terms", tuple((m, -c) for m, c in self._terms))
        return p

    def __sub__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scale(other)
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d = {}
        for m2, c2 in b:
            for m1, c1 in a:
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial(d)

    __rmul__ = __mul__

    def _scale(self, c):
        if not c:
            return Polynomial.zero()
        p = Polynomial()
        object.__setattr__(
            p, "_terms", tuple((m, _norm_coeff(c0 * c)) for m, c0 in self._terms)
        )
        return p

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self._scale(Fraction(1, 1) / other)
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    # -- grading -------------------------------------------------------------

    def homogeneous_weight(self, n: int):
        """The common weight of all terms, or None if the terms disagree.

        Weights are variable_weight(v, n) summed with multiplicity; raises
        ZeroPolynomial for the zero polynomial.
        """
        if not self._terms:
            raise ZeroPolynomial("weight of the zero polynomial is undefined")
        weight = None
        for mono, _ in self._terms:
            w = sum(variable_weight(v, n) * e for v, e in mono)
            if weight is None:
                weight = w
            elif w != weight:
                return None
        return weight

    # -- substitution ---------------------------------------------------------

    def evaluate(self, values) -> Fraction:
        """Exact numeric evaluation; every variable present must be covered."""
        total = Fraction(0)
        for mono, c in self._terms:
            acc = Fraction(c)
            for v, e in mono:
                if v not in values:
                    raise MissingAssignment(variable_text(v))
                acc *= Fraction(values[v]) ** e
            total += acc
        return total

    def substitute(self, assignment) -> "RationalFunction":
        """Full substitution by rational functions (or coercible values)."""
        for v in self.variables():
            if v not in assignment:
                raise MissingAssignment(variable_text(v))
        total = RationalFunction(0)
        for mono, c in self._terms:
            term = RationalFunction(Polynomial.constant(c))
            for v, e in mono:
                term = term * (_as_rational_function(assignment[v]) ** e)
            total = total + term
        return total

    def specialize(self, assignment) -> "Polynomial":
        """Substitute a subset of variables by polynomials, keep the rest."""
        total = Polynomial.zero()
        for mono, c in self._terms:
            kept = []
            factor = None
            for v, e in mono:
                if v in assignment:
                    val = _as_polynomial(assignment[v])
                    piece = val**e
                    factor = piece if factor is None else factor * piece
                else:
                    kept.append((v, e))
            term = Polynomial({tuple(kept): c})
            if factor is not None:
                term = term * factor
            total = total + term
        return total

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (mono, c) in enumerate(self._terms):
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = _coeff_str(mag)
            elif mag == 1:
                body = _mono_text(mono, "^{}", variable_text)
            else:
                body = f"{_coeff_str(mag)}*" + _mono_text(mono, "^{}", variable_text)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    __repr__ = __str__

    def latex(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (mono, c) in enumerate(self._terms):
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = _coeff_latex(mag)
            elif mag == 1:
                body = _mono_text(mono, "^{{{}}}", variable_latex)
            else:
                body = _coeff_latex(mag) + " " + _mono_text(mono, "^{{{}}}", variable_latex)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form; terms appear in the stored canonical order."""
        return {
            "terms": [
                {"coeff": _coeff_str(c), "monomial": [list(v) + [e] for v, e in mono]}
                for mono, c in self._terms
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        d = {}
        for term in data["terms"]:
            coeff = Fraction(term["coeff"])
            mono = []
            for entry in term["monomial"]:
                v = _check_variable(tuple(entry[:-1]))
                e = entry[-1]
                if not isinstance(e, int) or e < 1:
                    raise ValueError(f"bad exponent {e!r}")
                mono.append((v, e))
            mono.sort(key=lambda it: variable_key(it[0]))
            key = tuple(mono)
            d[key] = d.get(key, 0) + coeff
        return cls(d)


def _poly_or_none(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial.constant(x)
    return None


def _as_polynomial(x) -> Polynomial:
    p = _poly_or_none(x)
    if p is None:
        raise TypeError(f"cannot interpret {x!r} as a polynomial")
    return p


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """The quotient a / b when b divides a exactly.

    Classical multivariate long division against the single divisor b.  In
    the exact case the leading monomial of the remainder always stays
    divisible by the leading monomial of b; the first failure, or a nonzero
    final remainder, raises NonExactDivision.
    """
    b = _as_polynomial(b)
    a = _as_polynomial(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return Polynomial.zero()
    lead_mono, lead_coeff = b.terms[0]
    rem = dict(a.terms)
    quo = {}
    while rem:
        m = min(rem, key=_mono_key)
        c = rem.pop(m)
        if not _mono_divides(lead_mono, m):
            raise NonExactDivision(f"{b} does not divide exactly (stuck at {_mono_text(m, '^{}', variable_text) or '1'})")
        qm = _mono_div(m, lead_mono)
        qc = _norm_coeff(Fraction(c) / Fraction(lead_coeff))
        quo[qm] = quo.get(qm, 0) + qc
        for bm, bc in b.terms[1:]:
            mm = _mono_mul(qm, bm)
            val = rem.get(mm, 0) - qc * bc
            if val:
                rem[mm] = val
            elif mm in rem:
                del rem[mm]
    return Polynomial(quo)


class RationalFunction:
    """A quotient of polynomials, stored without polynomial GCD reduction.

    Equality is decided by cross-multiplication.  Construction normalizes a
    scalar only: the denominator is scaled to coprime integer coefficients
    with positive leading coefficient (and the numerator by the same
    factor), which keeps repeated arithmetic from inflating coefficients
    while leaving polynomial factors untouched.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=1):
        num = _as_polynomial(num)
        den = _as_polynomial(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = Polynomial.one()
        else:
            c = den.content()
            if den.leading_coefficient() < 0:
                c = -c
            if c != 1:
                inv = Fraction(1, 1) / c
                num = num._scale(inv)
                den = den._scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _rf_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den, self.num) ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def substitute(self, assignment) -> "RationalFunction":
        return self.num.substitute(assignment) / self.den.substitute(assignment)

    def evaluate(self, values) -> Fraction:
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(values) / d

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_fraction(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def __str__(self) -> str:
        if self.den == Polynomial.one():
            return str(self.num)
        return f"{_wrap(str(self.num), len(self.num) > 1)} / {_wrap(str(self.den), len(self.den) > 1)}"

    __repr__ = __str__

    def latex(self) -> str:
        if self.den == Polynomial.one():
            return self.num.latex()
        return f"\\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def to_json_dict(self) -> dict:
        return {"num": self.num.to_json_dict(), "den": self.den.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalFunction":
        return cls(
            Polynomial.from_json_dict(data["num"]),
            Polynomial.from_json_dict(data["den"]),
        )


def _wrap(s: str, needed: bool) -> str:
    return f"({s})" if needed else s


def _rf_or_none(x):
    if isinstance(x, RationalFunction):
        return x
    p = _poly_or_none(x)
    if p is None:
        return None
    return RationalFunction(p)


def _as_rational_function(x) -> RationalFunction:
    r = _rf_or_none(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as a rational function")
    return r


def h(i: int, j: int, k: int) -> Polynomial:
    """The polynomial consisting of the single variable h[i,j,k]."""
    return Polynomial.variable(hvar(i, j, k))


def t(m: int) -> Polynomial:
    """The polynomial consisting of the single variable t[m]."""
    return Polynomial.variable(tvar(m))
