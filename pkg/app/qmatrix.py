"""
The quantum matrix algebra R_q[M_{m,n}].

Generators x_ij (1 <= i <= m, 1 <= j <= n) are numbered row-major from 0, and
elements are kept in PBW normal form: linear combinations of ordered monomials
x_0^a_0 x_1^a_1 ... over Q(q), each monomial stored as its exponent vector.

Relations, for i < l and j < k:
    x_ij x_ik = q x_ik x_ij          x_ij x_lj = q x_lj x_ij
    x_ik x_lj = x_lj x_ik            x_ij x_lk - x_lk x_ij = (q - q^-1) x_ik x_lj

Monomials are compared by total degree, then by the exponent of the largest
variable, then the next largest, and so on.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Union

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from .errors import DomainError, QPrimeError
from .lattice import RootElt, Weight, deg_x, pact_exponent
from .qcoeff import ONE, Q_DOMAIN, Q_SYMBOL, RatFunc, ZERO
from .weyl import Permutation

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Terms = Dict[Monomial, RatFunc]

_PARSE_TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)


def order_key(mono: Monomial) -> tuple:
    """Sort key realizing the monomial order (larger key = larger monomial)"""
    return (sum(mono), mono[::-1])


def _bump(mono: Monomial, v: int, by: int = 1) -> Monomial:
    out = list(mono)
    out[v] += by
    return tuple(out)


def _accumulate(acc: Terms, mono: Monomial, coeff: RatFunc):
    total = acc.get(mono, ZERO) + coeff
    if total:
        acc[mono] = total
    else:
        acc.pop(mono, None)


@dataclass(frozen=True)
class Inhomogeneous:
    """Two terms of one element that disagree on a grading"""

    first: str
    first_degree: tuple[int, ...]
    second: str
    second_degree: tuple[int, ...]

    def __str__(self) -> str:
        return (
            f"inhomogeneous: {self.first} has {list(self.first_degree)}, "
            f"{self.second} has {list(self.second_degree)}"
        )


@dataclass(frozen=True)
class _SwapRule:
    """x_u x_v = c x_v x_u + d x_a x_b for u > v"""

    c: RatFunc
    d: RatFunc
    a: int
    b: int


class QMAlgebra:
    """
    R_q[M_{m,n}] with its straightening table.

    Products of monomials are memoized per algebra; use get_algebra() to share
    one instance per size.
    """

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise DomainError(f"quantum matrices need m, n >= 1, got {m}x{n}")
        self.m = m
        self.n = n
        self.nvars = m * n
        self.symbols = tuple(Symbol(self.var_name(v)) for v in range(self.nvars))
        self._rules = self._build_rules()
        self._var_cache: Dict[tuple[Monomial, int], Terms] = {}
        self._mono_cache: Dict[tuple[Monomial, Monomial], Terms] = {}
        self._minor_cache: Dict[tuple, "QMElement"] = {}
        self._check_admissible()
        logger.debug("built %dx%d quantum matrix algebra with %d rewrite rules", m, n, len(self._rules))

    # indexing

    def index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise DomainError(f"x_({i},{j}) is not a generator of the {self.m}x{self.n} algebra")
        return (i - 1) * self.n + (j - 1)

    def position(self, v: int) -> tuple[int, int]:
        return v // self.n + 1, v % self.n + 1

    def var_name(self, v: int) -> str:
        i, j = self.position(v)
        return f"x{i}{j}" if i < 10 and j < 10 else f"x{i}_{j}"

    # straightening

    def _build_rules(self) -> Dict[tuple[int, int], _SwapRule]:
        q = RatFunc.q_power(1)
        q_inv = RatFunc.q_power(-1)
        rules = {}
        for u in range(self.nvars):
            l, k = self.position(u)
            for v in range(u):
                i, j = self.position(v)
                if l == i or k == j:
                    rules[(u, v)] = _SwapRule(q_inv, ZERO, -1, -1)
                elif k < j:
                    rules[(u, v)] = _SwapRule(ONE, ZERO, -1, -1)
                else:
                    rules[(u, v)] = _SwapRule(ONE, -(q - q_inv), self.index(i, k), self.index(l, j))
        return rules

    def _check_admissible(self):
        """Every rewrite replaces x_u x_v by strictly smaller monomials"""
        zero = (0,) * self.nvars
        for (u, v), rule in self._rules.items():
            if not rule.d:
                continue
            replaced = _bump(_bump(zero, u), v)
            extra = _bump(_bump(zero, rule.a), rule.b)
            if not (rule.a < rule.b and order_key(extra) < order_key(replaced)):
                raise QPrimeError(f"rewrite rule for ({u}, {v}) is not compatible with the monomial order")

    def mono_times_var(self, mono: Monomial, v: int) -> Terms:
        """Normal form of x^mono * x_v"""
        key = (mono, v)
        cached = self._var_cache.get(key)
        if cached is not None:
            return cached
        top = max((w for w, e in enumerate(mono) if e), default=None)
        if top is None or top <= v:
            result = {_bump(mono, v): ONE}
        else:
            # x^mono = x^rest x_top and x_top x_v = c x_v x_top + d x_a x_b
            rule = self._rules[(top, v)]
            rest = _bump(mono, top, -1)
            result: Terms = {}
            for m1, c1 in self.mono_times_var(rest, v).items():
                for m2, c2 in self.mono_times_var(m1, top).items():
                    _accumulate(result, m2, rule.c * c1 * c2)
            if rule.d:
                for m1, c1 in self.mono_times_var(rest, rule.a).items():
                    for m2, c2 in self.mono_times_var(m1, rule.b).items():
                        _accumulate(result, m2, rule.d * c1 * c2)
        self._var_cache[key] = result
        return result

    def mono_times_mono(self, left: Monomial, right: Monomial) -> Terms:
        key = (left, right)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        current: Terms = {left: ONE}
        for v, e in enumerate(right):
            for _ in range(e):
                nxt: Terms = {}
                for mono, coeff in current.items():
                    for m2, c2 in self.mono_times_var(mono, v).items():
                        _accumulate(nxt, m2, coeff * c2)
                current = nxt
        self._mono_cache[key] = current
        return current

    def multiply(self, a: "QMElement", b: "QMElement") -> "QMElement":
        self._check_same(a)
        self._check_same(b)
        acc: Terms = {}
        for m1, c1 in a._terms.items():
            for m2, c2 in b._terms.items():
                coeff = c1 * c2
                for m3, c3 in self.mono_times_mono(m1, m2).items():
                    _accumulate(acc, m3, coeff * c3)
        return QMElement(self, acc)

    def product(self, factors: Iterable["QMElement"]) -> "QMElement":
        out = self.one()
        for factor in factors:
            out = self.multiply(out, factor)
        return out

    def _check_same(self, u: "QMElement"):
        if u.algebra is not self and (u.algebra.m, u.algebra.n) != (self.m, self.n):
            raise DomainError(
                f"element of the {u.algebra.m}x{u.algebra.n} algebra used in the {self.m}x{self.n} algebra"
            )

    # constructors

    def zero(self) -> "QMElement":
        return QMElement(self, {})

    def one(self) -> "QMElement":
        return QMElement(self, {(0,) * self.nvars: ONE})

    def monomial(self, exps: Sequence[int], coeff=1) -> "QMElement":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or min(exps, default=0) < 0:
            raise DomainError(f"{exps} is not an exponent vector of length {self.nvars}")
        coeff = RatFunc(coeff)
        return QMElement(self, {exps: coeff} if coeff else {})

    def generator(self, i: int, j: int) -> "QMElement":
        return self.monomial(_bump((0,) * self.nvars, self.index(i, j)))

    def generators(self) -> list[tuple[int, int]]:
        return [self.position(v) for v in range(self.nvars)]

    def from_terms(self, terms: Mapping[Sequence[int], object]) -> "QMElement":
        acc: Terms = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise DomainError(f"{exps} is not an exponent vector of length {self.nvars}")
            _accumulate(acc, exps, RatFunc(coeff))
        return QMElement(self, acc)

    def parse(self, text: str) -> "QMElement":
        """Read back a rendered element: a linear combination of normal-ordered monomials"""
        local = {sym.name: sym for sym in self.symbols}
        local["q"] = Q_SYMBOL
        try:
            expr = parse_expr(text, local_dict=local, transformations=_PARSE_TRANSFORMATIONS)
            poly = Poly(expr, *self.symbols, domain=Q_DOMAIN)
        except Exception as exc:
            raise DomainError(f"cannot parse {text!r} as an element of the {self.m}x{self.n} algebra") from exc
        return self.from_terms({monom: RatFunc(Q_DOMAIN.from_sympy(coeff)) for monom, coeff in poly.terms()})

    # quantum minors

    def quantum_minor(self, rows: Sequence[int], cols: Sequence[int], variant: str = "first") -> "QMElement":
        """
        Quantum minor on the given rows and columns.

        first:  sum over w of (-q)^l(w)  x_{r_1 c_w(1)} ... x_{r_k c_w(k)}
        second: sum over w of (-q)^-l(w) x_{r_w(k) c_k} ... x_{r_w(1) c_1}
        """
        rows, cols = tuple(rows), tuple(cols)
        if not rows or len(rows) != len(cols):
            raise DomainError(f"a quantum minor needs equal nonempty row and column sets, got {rows}, {cols}")
        if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
            raise DomainError(f"row and column sets must be sorted without repeats, got {rows}, {cols}")
        if rows[0] < 1 or rows[-1] > self.m or cols[0] < 1 or cols[-1] > self.n:
            raise DomainError(f"minor {rows} x {cols} leaves the {self.m}x{self.n} matrix")
        if variant not in ("first", "second"):
            raise DomainError(f"unknown minor variant {variant!r}")
        key = (rows, cols, variant)
        cached = self._minor_cache.get(key)
        if cached is not None:
            return cached
        k = len(rows)
        minus_q = RatFunc.q_power(1) * -1
        total = self.zero()
        for images in itertools.permutations(range(1, k + 1)):
            w = Permutation(images)
            if variant == "first":
                sign = minus_q ** w.length
                factors = [self.generator(rows[t], cols[w(t + 1) - 1]) for t in range(k)]
            else:
                sign = minus_q ** (-w.length)
                factors = [self.generator(rows[w(t) - 1], cols[t - 1]) for t in range(k, 0, -1)]
            total = total + self.product(factors) * sign
        self._minor_cache[key] = total
        return total

    def determinant(self) -> "QMElement":
        if self.m != self.n:
            raise DomainError(f"the quantum determinant needs a square algebra, got {self.m}x{self.n}")
        full = tuple(range(1, self.m + 1))
        return self.quantum_minor(full, full)

    # gradings

    def monomial_weight(self, mono: Monomial) -> tuple[int, ...]:
        """Torus weight: x_ij has weight e_i - e_{m+j}"""
        weight = [0] * (self.m + self.n)
        for v, e in enumerate(mono):
            if e:
                i, j = self.position(v)
                weight[i - 1] += e
                weight[self.m + j - 1] -= e
        return tuple(weight)

    def monomial_degree(self, mono: Monomial) -> RootElt:
        degree = RootElt.zero(self.m + self.n - 1)
        for v, e in enumerate(mono):
            if e:
                degree = degree + e * deg_x(*self.position(v), self.m, self.n)
        return degree

    def __repr__(self) -> str:
        return f"QMAlgebra({self.m}, {self.n})"

    def __reduce__(self):
        return (get_algebra, (self.m, self.n))


@lru_cache(maxsize=None)
def get_algebra(m: int, n: int) -> QMAlgebra:
    return QMAlgebra(m, n)


class QMElement:
    """Element of R_q[M_{m,n}] in PBW normal form"""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: QMAlgebra, terms: Terms):
        self.algebra = algebra
        self._terms = {mono: coeff for mono, coeff in terms.items() if coeff}

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    def monomials(self) -> list[Monomial]:
        """Monomials in decreasing order"""
        return sorted(self._terms, key=order_key, reverse=True)

    def coefficient(self, mono: Monomial) -> RatFunc:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise DomainError("the zero element has no leading monomial")
        return max(self._terms, key=order_key)

    def leading_coeff(self) -> RatFunc:
        return self._terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(mono) for mono in self._terms), default=0)

    def monic(self) -> "QMElement":
        return self * self.leading_coeff().inv()

    def support_mask(self) -> int:
        """Bitmask of variables occurring in the leading monomial"""
        return sum(1 << v for v, e in enumerate(self.leading_monomial()) if e)

    # arithmetic

    def _scalar(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc(other)
        return None

    def __add__(self, other: "QMElement") -> "QMElement":
        if not isinstance(other, QMElement):
            return NotImplemented
        self.algebra._check_same(other)
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            _accumulate(acc, mono, coeff)
        return QMElement(self.algebra, acc)

    def __neg__(self) -> "QMElement":
        return QMElement(self.algebra, {mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: "QMElement") -> "QMElement":
        if not isinstance(other, QMElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "QMElement":
        if isinstance(other, QMElement):
            return self.algebra.multiply(self, other)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        if not scalar:
            return self.algebra.zero()
        return QMElement(self.algebra, {mono: coeff * scalar for mono, coeff in self._terms.items()})

    def __rmul__(self, other) -> "QMElement":
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self * scalar

    def __pow__(self, exp: int) -> "QMElement":
        if exp < 0:
            raise DomainError("negative powers are not defined in R_q[M_{m,n}]")
        return self.algebra.product([self] * exp)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, QMElement):
            return NotImplemented
        return (self.algebra.m, self.algebra.n) == (other.algebra.m, other.algebra.n) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra.m, self.algebra.n, frozenset(self._terms.items())))

    # rendering

    def _render_monomial(self, mono: Monomial) -> str:
        factors = []
        for v, e in enumerate(mono):
            if e:
                name = self.algebra.var_name(v)
                factors.append(name if e == 1 else f"{name}^{e}")
        return " ".join(factors)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono in self.monomials():
            coeff = self._terms[mono]
            text, negated = str(coeff), str(-coeff)
            sign = "+"
            if text.startswith("-") and _simple(negated):
                sign, text = "-", negated
            elif not _simple(text):
                text = f"({text})"
            body = self._render_monomial(mono)
            if not body:
                term = text
            elif text == "1":
                term = body
            else:
                term = f"{text} {body}"
            pieces.append((sign, term))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self) -> str:
        return f"QMElement({self.algebra.m}x{self.algebra.n}: {self})"


def _simple(text: str) -> bool:
    return " " not in text and "/" not in text


def quantum_minor(algebra: QMAlgebra, rows: Sequence[int], cols: Sequence[int], variant: str = "first") -> QMElement:
    return algebra.quantum_minor(rows, cols, variant)


def multiply(a: QMElement, b: QMElement) -> QMElement:
    return a.algebra.multiply(a, b)


def _grading(u: QMElement, grade) -> Union[tuple[int, ...], Inhomogeneous, None]:
    seen = None
    for mono in u.monomials():
        degree = grade(mono)
        if seen is None:
            seen = (mono, degree)
        elif degree != seen[1]:
            return Inhomogeneous(
                u._render_monomial(seen[0]),
                tuple(seen[1]),
                u._render_monomial(mono),
                tuple(degree),
            )
    return None if seen is None else seen[1]


def torus_weight(u: QMElement) -> Union[tuple[int, ...], Inhomogeneous]:
    """Common torus weight of all terms, or the first disagreement"""
    found = _grading(u, u.algebra.monomial_weight)
    return (0,) * (u.algebra.m + u.algebra.n) if found is None else found


def q_degree(u: QMElement) -> Union[RootElt, Inhomogeneous]:
    """Common root-lattice degree of all terms, or the first disagreement"""
    found = _grading(u, lambda mono: u.algebra.monomial_degree(mono).coords)
    if found is None:
        return RootElt.zero(u.algebra.m + u.algebra.n - 1)
    if isinstance(found, Inhomogeneous):
        return found
    return RootElt(found)


def apply_pact(mu: Weight, u: QMElement) -> QMElement:
    """mu . u: rescale each term by q^<mu, deg>"""
    algebra = u.algebra
    return QMElement(
        algebra,
        {
            mono: coeff * RatFunc.q_power(pact_exponent(mu, algebra.monomial_degree(mono)))
            for mono, coeff in u._terms.items()
        },
    )
