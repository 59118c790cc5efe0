"""
Groebner bases of left and two-sided ideals of R_q[M_{m,n}].

R_q[M_{m,n}] is a solvable polynomial ring for the order in qmatrix.order_key:
x^a x^b = c x^(a+b) + (smaller terms) with c a power of q. Left ideals are
completed with Buchberger's algorithm on left S-polynomials. Two-sided ideals
interleave that completion with right multiplication by every generator.

The coprime-leading-monomial criterion is not sound in this setting and is
never applied; every pair is reduced.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from config import Settings
from .errors import DegreeGuardExceeded, DomainError, TruncatedBasisError
from .qcoeff import RatFunc
from .qmatrix import Monomial, QMAlgebra, QMElement, order_key

logger = logging.getLogger(__name__)

ORDER_TAG = "deg-then-largest-variable-lex"


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


class _Reducer:
    """Left division by a fixed list of monic elements, with memoized left multiples"""

    def __init__(self, algebra: QMAlgebra, elements: Sequence[QMElement]):
        self.algebra = algebra
        self.elements = list(elements)
        self.leads = [g.leading_monomial() for g in self.elements]
        self._multiples: Dict[tuple[int, Monomial], QMElement] = {}

    def add(self, g: QMElement):
        self.elements.append(g)
        self.leads.append(g.leading_monomial())

    def left_multiple(self, index: int, shift: Monomial) -> QMElement:
        """x^shift * g_index, normalized to leading coefficient 1"""
        key = (index, shift)
        cached = self._multiples.get(key)
        if cached is None:
            g = self.elements[index]
            if any(shift):
                cached = (self.algebra.monomial(shift) * g).monic()
            else:
                cached = g
            self._multiples[key] = cached
        return cached

    def find_divisor(self, mono: Monomial) -> Optional[int]:
        for index, lead in enumerate(self.leads):
            if _divides(lead, mono):
                return index
        return None

    def reduce(self, u: QMElement, full: bool = True) -> QMElement:
        """
        Remainder of u on left division.

        With full=False only the leading term is reduced until it is
        irreducible; with full=True every term of the remainder is irreducible.
        """
        current = dict(u._terms)
        remainder: Dict[Monomial, RatFunc] = {}
        while current:
            mono = max(current, key=order_key)
            index = self.find_divisor(mono)
            if index is None:
                if not full:
                    remainder.update(current)
                    break
                remainder[mono] = current.pop(mono)
                continue
            coeff = current[mono]
            multiple = self.left_multiple(index, _quotient(mono, self.leads[index]))
            for m2, c2 in multiple._terms.items():
                total = current.get(m2, RatFunc(0)) - coeff * c2
                if total:
                    current[m2] = total
                else:
                    current.pop(m2, None)
        return QMElement(self.algebra, remainder)


@dataclass
class GroebnerBasis:
    """Inter-reduced monic basis with completion metadata"""

    algebra: QMAlgebra
    elements: tuple[QMElement, ...]
    kind: str
    pair_count: int = 0
    max_degree: int = 0
    truncated: bool = False
    order: str = ORDER_TAG
    _reducer: Optional[_Reducer] = field(default=None, init=False, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.elements]

    def reducer(self) -> _Reducer:
        if self._reducer is None:
            self._reducer = _Reducer(self.algebra, self.elements)
        return self._reducer

    def normal_form(self, u: QMElement) -> QMElement:
        return normal_form(u, self)

    def contains(self, u: QMElement) -> bool:
        return membership(u, self)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "m": self.algebra.m,
            "n": self.algebra.n,
            "elements": [str(g) for g in self.elements],
            "pair_count": self.pair_count,
            "max_degree": self.max_degree,
            "truncated": self.truncated,
        }


def _common_algebra(gens: Sequence[QMElement], algebra: Optional[QMAlgebra]) -> QMAlgebra:
    if algebra is None:
        if not gens:
            raise DomainError("an empty generating set needs an explicit algebra")
        algebra = gens[0].algebra
    for g in gens:
        algebra._check_same(g)
    return algebra


def _interreduce(algebra: QMAlgebra, elements: Iterable[QMElement]) -> tuple[QMElement, ...]:
    """Minimalize leading monomials, reduce tails, make monic, sort ascending"""
    candidates = sorted((g.monic() for g in elements if g), key=lambda g: order_key(g.leading_monomial()))
    minimal: List[QMElement] = []
    for g in candidates:
        lead = g.leading_monomial()
        if not any(_divides(h.leading_monomial(), lead) for h in minimal):
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = _Reducer(algebra, minimal[:index] + minimal[index + 1 :])
        lead = g.leading_monomial()
        tail = QMElement(algebra, {mono: c for mono, c in g._terms.items() if mono != lead})
        reduced.append(algebra.monomial(lead) + others.reduce(tail))
    return tuple(reduced)


def _complete(
    gens: Sequence[QMElement],
    kind: str,
    algebra: Optional[QMAlgebra],
    degree_guard: Optional[int],
    truncate: bool = False,
) -> GroebnerBasis:
    algebra = _common_algebra(gens, algebra)
    guard = Settings.degree_guard_for(algebra.m, algebra.n) if degree_guard is None else degree_guard
    reducer = _Reducer(algebra, [])
    tasks: list = []
    seq = itertools.count()
    pair_count = 0
    max_degree = 0

    def push(key_mono: Monomial, task: tuple):
        heapq.heappush(tasks, (order_key(key_mono), next(seq), task))

    def admit(h: QMElement):
        nonlocal max_degree
        h = h.monic()
        lead = h.leading_monomial()
        max_degree = max(max_degree, sum(lead))
        index = len(reducer.elements)
        reducer.add(h)
        logger.debug("basis element %d: leading monomial %s", index, lead)
        for other in range(index):
            push(_lcm(reducer.leads[other], lead), ("pair", other, index))
        if kind == "two-sided":
            for v in range(algebra.nvars):
                push(tuple(e + (w == v) for w, e in enumerate(lead)), ("right", index, v))

    for g in gens:
        remainder = reducer.reduce(g)
        if remainder:
            admit(remainder)

    while tasks:
        (degree, _), _, task = heapq.heappop(tasks)
        if degree > guard:
            if truncate:
                logger.warning(
                    "%s completion stopped at degree %d (guard %d), basis is truncated", kind, degree, guard
                )
                elements = _interreduce(algebra, reducer.elements)
                return GroebnerBasis(
                    algebra, elements, kind, pair_count=pair_count, max_degree=max_degree, truncated=True
                )
            raise DegreeGuardExceeded(
                f"{kind} completion reached degree {degree} above the guard {guard}",
                degree=degree,
                guard=guard,
                partial=reducer.elements,
                pair_count=pair_count,
            )
        pair_count += 1
        if task[0] == "pair":
            _, i, j = task
            lcm = _lcm(reducer.leads[i], reducer.leads[j])
            s_poly = reducer.left_multiple(i, _quotient(lcm, reducer.leads[i])) - reducer.left_multiple(
                j, _quotient(lcm, reducer.leads[j])
            )
        else:
            _, i, v = task
            s_poly = reducer.elements[i] * algebra.monomial(tuple(int(w == v) for w in range(algebra.nvars)))
        remainder = reducer.reduce(s_poly)
        if remainder:
            admit(remainder)

    elements = _interreduce(algebra, reducer.elements)
    logger.debug("%s basis: %d elements after %d tasks, max degree %d", kind, len(elements), pair_count, max_degree)
    return GroebnerBasis(algebra, elements, kind, pair_count=pair_count, max_degree=max_degree)


def left_groebner(
    gens: Sequence[QMElement], algebra: QMAlgebra = None, degree_guard: int = None, truncate: bool = False
) -> GroebnerBasis:
    """
    Left Groebner basis of the left ideal generated by gens.

    Past the degree guard this raises DegreeGuardExceeded, or with
    truncate=True returns the partial basis flagged as truncated.
    """
    return _complete(list(gens), "left", algebra, degree_guard, truncate)


def two_sided_groebner(
    gens: Sequence[QMElement], algebra: QMAlgebra = None, degree_guard: int = None, truncate: bool = False
) -> GroebnerBasis:
    """Left Groebner basis of the two-sided ideal generated by gens"""
    return _complete(list(gens), "two-sided", algebra, degree_guard, truncate)


def normal_form(u: QMElement, basis: GroebnerBasis) -> QMElement:
    basis.algebra._check_same(u)
    if not basis.elements:
        return u
    return basis.reducer().reduce(u)


def membership(u: QMElement, basis: GroebnerBasis) -> bool:
    return not normal_form(u, basis)


def gk_dim_quotient(basis: GroebnerBasis) -> int:
    """
    Growth degree of the standard monomials: the largest set S of variables
    such that no leading monomial is supported inside S.
    """
    if basis.truncated:
        raise TruncatedBasisError("GK dimension needs a complete basis")
    nvars = basis.algebra.nvars
    lead_masks = [g.support_mask() for g in basis.elements]
    for size in range(nvars, -1, -1):
        for chosen in itertools.combinations(range(nvars), size):
            mask = sum(1 << v for v in chosen)
            if all(lead & ~mask for lead in lead_masks):
                return size
    return 0


def reduced_basis_equal(first: GroebnerBasis, second: GroebnerBasis) -> bool:
    """Reduced bases of the same ideal coincide element by element"""
    return (first.algebra.m, first.algebra.n) == (second.algebra.m, second.algebra.n) and list(
        first.elements
    ) == list(second.elements)
