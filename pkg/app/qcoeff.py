"""Exact arithmetic over Q(q): Laurent polynomials, rational functions, quantum integers"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from sympy import QQ, Symbol
from sympy.polys.fields import FracElement
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .errors import DomainError, EvaluationError

logger = logging.getLogger(__name__)

Q_SYMBOL = Symbol("q")

# Q(q) as a sympy domain; its elements are reduced fractions of polynomials over QQ
Q_DOMAIN = QQ.frac_field(Q_SYMBOL)
_FIELD = Q_DOMAIN.field
_Q = _FIELD.gens[0]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)

Scalar = Union["RatFunc", "LaurentPoly", int, Fraction]


def _to_fraction(value) -> Fraction:
    """Convert a sympy QQ element (gmpy or python backend) to a Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


def _canonical(f):
    """Field element with a positive leading denominator coefficient"""
    # sympy leaves the sign unnormalized on some paths (negative powers, raw matrix entries)
    if f.denom.LC < 0:
        return _FIELD.new(-f.numer, -f.denom)
    return f


def _render_terms(items: Iterable[tuple[int, Fraction]]) -> str:
    """
    Render (exponent, coefficient) pairs, highest exponent first.

    Produces strings like "q + q^-1" or "3/2*q^2 - 1".
    """
    pieces = []
    for exp, coeff in items:
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            power = "q" if exp == 1 else f"q^{exp}"
            body = power if mag == 1 else f"{mag}*{power}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class LaurentPoly:
    """
    Element of Q[q, q^-1].

    Stored as a tuple of (exponent, coefficient) pairs sorted by descending
    exponent; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Union[int, Fraction]] = None):
        cleaned = {}
        for exp, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                cleaned[int(exp)] = coeff
        self._terms = tuple(sorted(cleaned.items(), reverse=True))

    @classmethod
    def monomial(cls, exp: int, coeff: Union[int, Fraction] = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_ratfunc(cls, value: "RatFunc") -> "LaurentPoly":
        """Convert a rational function whose denominator is a power of q"""
        terms = value.laurent_terms()
        if terms is None:
            raise DomainError(f"{value} is not a Laurent polynomial")
        return cls(terms)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def to_ratfunc(self) -> "RatFunc":
        f = _FIELD.zero
        for exp, coeff in self._terms:
            f += _Q**exp * QQ(coeff.numerator, coeff.denominator)
        return RatFunc(f)

    def eval_at_one(self) -> Fraction:
        return sum((coeff for _, coeff in self._terms), Fraction(0))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms:
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exp: -coeff for exp, coeff in self._terms})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({exp: coeff * other for exp, coeff in self._terms})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return _render_terms(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


class RatFunc:
    """
    Element of the field Q(q).

    Wraps a sympy FracElement, which keeps numerator and denominator coprime.
    Values are immutable; equality compares canonical forms.
    """

    __slots__ = ("_f",)

    def __init__(self, value: Scalar = 0):
        if isinstance(value, RatFunc):
            f = value._f
        elif isinstance(value, LaurentPoly):
            f = value.to_ratfunc()._f
        elif isinstance(value, FracElement):
            f = _canonical(value)
        elif isinstance(value, int):
            f = _FIELD.one * value
        elif isinstance(value, Fraction):
            f = _FIELD.one * QQ(value.numerator, value.denominator)
        else:
            raise DomainError(f"cannot build a rational function from {value!r}")
        self._f = f

    @classmethod
    def q_power(cls, exp: int) -> "RatFunc":
        return _q_power(exp)

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        expr = parse_expr(text, local_dict={"q": Q_SYMBOL}, transformations=_TRANSFORMATIONS)
        return cls(_FIELD.from_expr(expr))

    @property
    def raw(self):
        """The underlying sympy field element"""
        return self._f

    @property
    def numerator(self):
        """Numerator, scaled so that the denominator is monic"""
        return self._f.numer.quo_ground(self._f.denom.LC)

    @property
    def denominator(self):
        """Monic denominator"""
        return self._f.denom.monic()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._f + other._f)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._f - other._f)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(other._f - self._f)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._f * other._f)

    __rmul__ = __mul__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self._f)

    def inv(self) -> "RatFunc":
        if not self._f:
            raise EvaluationError("division by zero in Q(q)")
        return RatFunc(1 / self._f)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exp: int) -> "RatFunc":
        if exp < 0 and not self._f:
            raise EvaluationError("negative power of zero")
        if exp < 0:
            return self.inv() ** -exp
        return RatFunc(self._f**exp)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._f == other._f

    def __hash__(self) -> int:
        return hash(self._f)

    def __bool__(self) -> bool:
        return bool(self._f)

    def eval_at_one(self) -> Fraction:
        """Substitute q = 1"""
        num = sum((_to_fraction(c) for _, c in self._f.numer.terms()), Fraction(0))
        den = sum((_to_fraction(c) for _, c in self._f.denom.terms()), Fraction(0))
        if den == 0:
            raise EvaluationError(f"denominator of {self} vanishes at q = 1")
        return num / den

    def laurent_terms(self) -> dict[int, Fraction] | None:
        """Exponent -> coefficient map if the denominator is a power of q, else None"""
        den = self._f.denom.terms()
        if len(den) != 1:
            return None
        (shift,), lead = den[0]
        lead = _to_fraction(lead)
        return {
            exp - shift: _to_fraction(coeff) / lead
            for (exp,), coeff in self._f.numer.terms()
        }

    def is_laurent(self) -> bool:
        return self.laurent_terms() is not None

    def as_q_power(self) -> int | None:
        """Return e if this equals q^e, otherwise None"""
        terms = self.laurent_terms()
        if terms is None or len(terms) != 1:
            return None
        (exp, coeff), = terms.items()
        return exp if coeff == 1 else None

    def __str__(self) -> str:
        terms = self.laurent_terms()
        if terms is not None:
            return _render_terms(sorted(terms.items(), reverse=True))
        num = _render_terms(
            sorted(((e, _to_fraction(c)) for (e,), c in self.numerator.terms()), reverse=True)
        )
        den = _render_terms(
            sorted(((e, _to_fraction(c)) for (e,), c in self.denominator.terms()), reverse=True)
        )
        if len(self.numerator.terms()) > 1:
            num = f"({num})"
        if len(self.denominator.terms()) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


ZERO = RatFunc(0)
ONE = RatFunc(1)
Q = RatFunc(_Q)


@lru_cache(maxsize=None)
def _q_power(exp: int) -> RatFunc:
    return RatFunc(_Q**exp)


@lru_cache(maxsize=None)
def qint(n: int, d: int = 1) -> LaurentPoly:
    """Symmetric quantum integer [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})"""
    if n < 1 or d < 1:
        raise DomainError(f"qint needs n >= 1 and d >= 1, got n={n}, d={d}")
    return LaurentPoly({d * (n - 1 - 2 * t): 1 for t in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"qfactorial needs n >= 0, got {n}")
    out = LaurentPoly({0: 1})
    for t in range(1, n + 1):
        out = out * qint(t, d)
    return out


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial [n]! / ([k]! [n-k]!) with quantum integers in q^d"""
    if not 0 <= k <= n:
        raise DomainError(f"gauss_binom needs 0 <= k <= n, got n={n}, k={k}")
    value = qfactorial(n, d).to_ratfunc() / (qfactorial(k, d) * qfactorial(n - k, d)).to_ratfunc()
    return LaurentPoly.from_ratfunc(value)
