"""
Torus-invariant primes of R_q[M_{m,n}] and their polynormal generating sequences.

For y <= c^m the prime I_{m,n}(y) is generated by the quantum minors
Delta(J), J running over

    Upsilon(y) = { J : |J| = k <= m+n-1, J <= c^m([1,k]), not J >= y([1,k]) },

taken in (|J|, lexicographic) order. Each minor is normal modulo the ideal of
its predecessors, u x_ab = q^e x_ab u with e = <wt_eta(J) - c^m(omega_k), deg x_ab>.
This module builds those sequences and checks the structural claims about them.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence

from .certificate import Certificate, certify
from .errors import DomainError
from .groebner import (
    GroebnerBasis,
    gk_dim_quotient,
    left_groebner,
    normal_form,
    reduced_basis_equal,
    two_sided_groebner,
)
from .lattice import Weight, deg_x, omega, pact_exponent, pairing, weyl_action, wt_eta
from .qcoeff import RatFunc
from .qmatrix import Inhomogeneous, QMAlgebra, QMElement, get_algebra, q_degree
from .weyl import Permutation, bruhat_covers, bruhat_interval, bruhat_leq, coxeter_cm, prefix_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorIndex:
    """An index set J together with the rows and columns of Delta(J)"""

    J: tuple[int, ...]
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.J)

    def element(self, algebra: QMAlgebra) -> QMElement:
        if not self.rows:
            return algebra.one()
        return algebra.quantum_minor(self.rows, self.cols)

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in self.J) + "}"


def subset_leq(J: Sequence[int], K: Sequence[int]) -> bool:
    """J <= K iff j_l <= k_l for every l, both sorted"""
    if len(J) != len(K):
        raise DomainError(f"cannot compare index sets of sizes {len(J)} and {len(K)}")
    return all(a <= b for a, b in zip(sorted(J), sorted(K)))


def check_below_top(y: Permutation, m: int, n: int) -> Permutation:
    """Return c^m, or raise naming the first prefix where y fails the tableau criterion"""
    top, _ = coxeter_cm(m, n)
    if y.size != m + n:
        raise DomainError(f"y = {y} is not an element of S_{m + n}")
    if not bruhat_leq(y, top):
        for k in range(1, m + n):
            below, above = prefix_set(y, k), prefix_set(top, k)
            if not subset_leq(below, above):
                raise DomainError(
                    f"y = {y} is not below c^{m} = {top}: y([1,{k}]) = {set(below)} "
                    f"is not <= c^{m}([1,{k}]) = {set(above)}"
                )
        raise DomainError(f"y = {y} is not below c^{m} = {top}")
    return top


def delta_index(J: Sequence[int], m: int, n: int) -> MinorIndex:
    """
    Rows and columns of Delta(J):
    rows = w0(p1(J) minus p1(c^m([1,k]))) with w0(i) = m+1-i,
    cols = (p2(c^m([1,k])) minus p2(J)) shifted down by m.
    """
    J = tuple(J)
    if not J or list(J) != sorted(set(J)) or J[0] < 1 or J[-1] > m + n:
        raise DomainError(f"{J} is not a nonempty sorted subset of [1, {m + n}]")
    top, _ = coxeter_cm(m, n)
    k = len(J)
    if k >= m + n:
        raise DomainError(f"|J| = {k} must be at most {m + n - 1}")
    top_prefix = prefix_set(top, k)
    if not subset_leq(J, top_prefix):
        raise DomainError(f"J = {set(J)} is not <= c^{m}([1,{k}]) = {set(top_prefix)}")
    top_rows = {i for i in top_prefix if i <= m}
    top_cols = {j for j in top_prefix if j > m}
    rows = tuple(sorted(m + 1 - i for i in J if i <= m and i not in top_rows))
    cols = tuple(sorted(j - m for j in top_cols if j not in J))
    if len(rows) != len(cols):
        raise DomainError(f"Delta({set(J)}) has {len(rows)} rows but {len(cols)} columns")
    return MinorIndex(J, rows, cols)


def upsilon(y: Permutation, m: int, n: int) -> list[MinorIndex]:
    top = check_below_top(y, m, n)
    found = []
    for k in range(1, m + n):
        top_prefix = prefix_set(top, k)
        y_prefix = prefix_set(y, k)
        for J in itertools.combinations(range(1, m + n + 1), k):
            if subset_leq(J, top_prefix) and not subset_leq(y_prefix, J):
                found.append(delta_index(J, m, n))
    return found


def generating_sequence(
    y: Permutation, m: int, n: int, dedup: bool = False
) -> list[tuple[MinorIndex, QMElement]]:
    """Upsilon(y) in (k, lex) order, each index materialized as its minor"""
    algebra = get_algebra(m, n)
    sequence = []
    seen = set()
    for index in upsilon(y, m, n):
        minor = index.element(algebra)
        if dedup and minor in seen:
            continue
        seen.add(minor)
        sequence.append((index, minor))
    return sequence


def predicted_scalar(index: MinorIndex, generator: tuple[int, int], m: int, n: int) -> int:
    """<wt_eta(J) - c^m(omega_k), deg x_ab>"""
    top, _ = coxeter_cm(m, n)
    rank = m + n - 1
    mu = wt_eta(index.J, m, n) - weyl_action(top, omega(index.k, rank))
    return pact_exponent(mu, deg_x(*generator, m, n))


def proportionality_exponent(lhs: QMElement, rhs: QMElement) -> Optional[int]:
    """e with lhs = q^e rhs, or None when no such power of q exists (or both vanish)"""
    if not lhs or not rhs:
        return None
    if set(lhs.terms) != set(rhs.terms):
        return None
    lead = lhs.leading_monomial()
    ratio = lhs.coefficient(lead) / rhs.coefficient(lead)
    if lhs != rhs * ratio:
        return None
    return ratio.as_q_power()


@lru_cache(maxsize=None)
def ideal_basis(y: Permutation, m: int, n: int, degree_guard: int = None) -> GroebnerBasis:
    """Two-sided basis of I_{m,n}(y)"""
    algebra = get_algebra(m, n)
    gens = [minor for _, minor in generating_sequence(y, m, n)]
    basis = two_sided_groebner(gens, algebra=algebra, degree_guard=degree_guard)
    logger.debug("I(%s) in %dx%d: %d basis elements", y, m, n, len(basis))
    return basis


def _check_normal(
    cert: Certificate,
    u: QMElement,
    label: str,
    predictions: Iterable[tuple[tuple[int, int], int]],
    basis: GroebnerBasis,
):
    """Record u x_ab = q^e x_ab u modulo basis for every generator"""
    algebra = u.algebra
    for (a, b), exponent in predictions:
        x = algebra.generator(a, b)
        left = normal_form(u * x, basis)
        right = normal_form(x * u, basis)
        remainder = left - right * RatFunc.q_power(exponent)
        observed = proportionality_exponent(left, right)
        if not left and not right:
            observed = exponent
        cert.add_scalar(f"{label} x{a}{b}", exponent, observed)
        if remainder:
            cert.fail("not_normal", generator=label, a=a, b=b, remainder=str(remainder))


def verify_generation(y: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None) -> Certificate:
    """The left ideal generated by the sequence is already two-sided"""
    with certify("generation", m, n, y, timing=timing) as cert:
        algebra = get_algebra(m, n)
        gens = [minor for _, minor in generating_sequence(y, m, n)]
        left = left_groebner(gens, algebra=algebra, degree_guard=degree_guard)
        two_sided = ideal_basis(y, m, n, degree_guard)
        if reduced_basis_equal(left, two_sided):
            cert.add_witness("bases_agree", size=len(left), pair_count=left.pair_count)
        else:
            cert.fail("bases_differ", left=[str(g) for g in left], two_sided=[str(g) for g in two_sided])
    return cert


def verify_polynormal(y: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None) -> Certificate:
    """
    Each minor of the sequence is a P-eigenvector and is normal modulo its
    predecessors with the predicted q-power.
    """
    with certify("polynormal", m, n, y, timing=timing) as cert:
        algebra = get_algebra(m, n)
        sequence = generating_sequence(y, m, n)
        staged = two_sided_groebner([], algebra=algebra, degree_guard=degree_guard)
        for position, (index, minor) in enumerate(sequence, 1):
            degree = q_degree(minor)
            if isinstance(degree, Inhomogeneous):
                cert.fail("inhomogeneous", position=position, J=str(index), report=str(degree))
            label = f"{position}:Delta{index}"
            cert.add_witness("generator", position=position, J=list(index.J), minor=str(minor))
            predictions = [((a, b), predicted_scalar(index, (a, b), m, n)) for a, b in algebra.generators()]
            _check_normal(cert, minor, label, predictions, staged)
            staged = two_sided_groebner(list(staged.elements) + [minor], algebra=algebra, degree_guard=degree_guard)
        cert.merge(verify_generation(y, m, n, degree_guard, timing=False))
    return cert


def verify_poset(m: int, n: int, degree_guard: int = None, timing: bool = None) -> Certificate:
    """I(y) is contained in I(y') exactly when y <= y'"""
    top, _ = coxeter_cm(m, n)
    with certify("poset", m, n, top, timing=timing) as cert:
        interval = bruhat_interval(top)
        bases = {y: ideal_basis(y, m, n, degree_guard) for y in interval}
        generators = {y: [minor for _, minor in generating_sequence(y, m, n)] for y in interval}
        rows = []
        for y in interval:
            row = []
            for other in interval:
                contained = all(not normal_form(g, bases[other]) for g in generators[y])
                expected = bruhat_leq(y, other)
                row.append(int(contained))
                if contained != expected:
                    cert.fail("incidence_mismatch", y=str(y), other=str(other), contained=contained, bruhat=expected)
            rows.append("".join(str(bit) for bit in row))
        cert.add_witness("incidence", order=[str(y) for y in interval], rows=rows)
    return cert


def verify_height(y: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None) -> Certificate:
    with certify("height", m, n, y, timing=timing) as cert:
        gk = gk_dim_quotient(ideal_basis(y, m, n, degree_guard))
        expected = m * n - y.length
        cert.add_witness("gk_dim", gk_dim=gk, expected=expected, length=y.length)
        if gk != expected:
            cert.fail("gk_dim_mismatch", gk_dim=gk, expected=expected)
    return cert


def verify_heights(m: int, n: int, degree_guard: int = None, timing: bool = None) -> Certificate:
    """GKdim of every quotient equals mn - l(y)"""
    top, _ = coxeter_cm(m, n)
    with certify("heights", m, n, top, timing=timing) as cert:
        for y in bruhat_interval(top):
            cert.merge(verify_height(y, m, n, degree_guard, timing=False), prefix=str(y))
    return cert


@dataclass
class SeparatingMinor:
    k: int
    J: tuple[int, ...]
    element: QMElement
    certificate: Certificate


def _separating_predictions(y1: Permutation, k: int, algebra: QMAlgebra) -> list[tuple[tuple[int, int], int]]:
    """Exponents <-y1(omega_k) - c^m(omega_k), deg x_ab>"""
    m, n = algebra.m, algebra.n
    top, _ = coxeter_cm(m, n)
    rank = m + n - 1
    mu: Weight = -weyl_action(y1, omega(k, rank)) - weyl_action(top, omega(k, rank))
    return [((a, b), pairing(mu, deg_x(a, b, m, n))) for a, b in algebra.generators()]


def separating_minor(
    y1: Permutation, y2: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None
) -> SeparatingMinor:
    """
    Delta(y1([1,k])) for the first k where the prefixes of y1 and y2 differ:
    it lies in I(y2), not in I(y1), and is normal modulo I(y1).
    """
    check_below_top(y2, m, n)
    if y1 == y2 or not bruhat_leq(y1, y2):
        raise DomainError(f"separating_minor needs y1 < y2, got {y1} and {y2}")
    k = next(k for k in range(1, m + n) if prefix_set(y1, k) != prefix_set(y2, k))
    J = prefix_set(y1, k)
    algebra = get_algebra(m, n)
    minor = delta_index(J, m, n).element(algebra)
    with certify("separating_minor", m, n, y1, timing=timing) as cert:
        cert.add_witness("pair", y1=str(y1), y2=str(y2), k=k, J=list(J), minor=str(minor))
        upper = ideal_basis(y2, m, n, degree_guard)
        lower = ideal_basis(y1, m, n, degree_guard)
        if normal_form(minor, upper):
            cert.fail("not_in_upper", remainder=str(normal_form(minor, upper)))
        if not normal_form(minor, lower):
            cert.fail("in_lower", minor=str(minor))
        _check_normal(cert, minor, f"Delta{set(J)}", _separating_predictions(y1, k, algebra), lower)
    return SeparatingMinor(k, J, minor, cert)


def first_normal_generator(
    y1: Permutation, y2: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None
) -> tuple[Optional[MinorIndex], Certificate]:
    """The first generator of I(y2) outside I(y1), certified normal modulo I(y1)"""
    if y1 == y2 or not bruhat_leq(y1, y2):
        raise DomainError(f"first_normal_generator needs y1 < y2, got {y1} and {y2}")
    algebra = get_algebra(m, n)
    lower = ideal_basis(y1, m, n, degree_guard)
    with certify("first_normal_generator", m, n, y1, timing=timing) as cert:
        for index, minor in generating_sequence(y2, m, n):
            if normal_form(minor, lower):
                cert.add_witness("generator", y2=str(y2), J=list(index.J), minor=str(minor))
                predictions = [((a, b), predicted_scalar(index, (a, b), m, n)) for a, b in algebra.generators()]
                _check_normal(cert, minor, f"Delta{index}", predictions, lower)
                return index, cert
        cert.fail("no_generator_outside", y2=str(y2))
    return None, cert


def verify_separation_pair(
    y1: Permutation, y2: Permutation, m: int, n: int, degree_guard: int = None, timing: bool = None
) -> Certificate:
    with certify("separation", m, n, y1, timing=timing) as cert:
        found = separating_minor(y1, y2, m, n, degree_guard, timing=False)
        cert.merge(found.certificate)
        _, generator_cert = first_normal_generator(y1, y2, m, n, degree_guard, timing=False)
        cert.merge(generator_cert)
    return cert


def separation_pairs(m: int, n: int, pairs: str = "covers") -> list[tuple[Permutation, Permutation]]:
    top, _ = coxeter_cm(m, n)
    interval = bruhat_interval(top)
    if pairs == "covers":
        return bruhat_covers(interval)
    if pairs == "all":
        return [(a, b) for a in interval for b in interval if a != b and bruhat_leq(a, b)]
    raise DomainError(f"pairs must be 'covers' or 'all', got {pairs!r}")


def verify_separation(
    m: int, n: int, pairs: str = "covers", degree_guard: int = None, timing: bool = None
) -> Certificate:
    """Every nested pair of primes is separated by a normal element"""
    top, _ = coxeter_cm(m, n)
    with certify("separation_all", m, n, top, timing=timing) as cert:
        for y1, y2 in separation_pairs(m, n, pairs):
            cert.merge(verify_separation_pair(y1, y2, m, n, degree_guard, timing=False), prefix=f"{y1}<{y2}")
    return cert
