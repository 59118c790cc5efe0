import itertools

import pytest

from app.errors import DomainError
from app.lattice import RootElt, Weight, omega
from app.qcoeff import RatFunc
from app.qmatrix import Inhomogeneous, apply_pact, get_algebra, q_degree, quantum_minor, torus_weight

q = RatFunc.q_power(1)
q_inv = RatFunc.q_power(-1)


def test_straightening_examples(alg22, x22):
    x11, x12, x21, x22_ = x22["x11"], x22["x12"], x22["x21"], x22["x22"]
    assert x12 * x11 == alg22.monomial((1, 1, 0, 0), q_inv)
    assert x22_ * x11 == alg22.monomial((1, 0, 0, 1)) - alg22.monomial((0, 1, 1, 0), q - q_inv)
    assert x11 * x11 == alg22.monomial((2, 0, 0, 0))
    assert x21 * x12 == x12 * x21


def test_rendering(alg22, x22):
    assert str(x22["x22"] * x22["x11"]) == "x11 x22 + (-q + q^-1) x12 x21"
    assert str(x22["x11"] ** 2 * 3) == "3 x11^2"
    assert str(alg22.zero()) == "0"
    assert str(alg22.one() - x22["x21"]) == "-x21 + 1"


def test_defining_relations(alg33):
    gen = alg33.generator
    for i, l in itertools.combinations(range(1, 4), 2):
        for j, k in itertools.combinations(range(1, 4), 2):
            assert gen(i, j) * gen(i, k) == gen(i, k) * gen(i, j) * q
            assert gen(i, j) * gen(l, j) == gen(l, j) * gen(i, j) * q
            assert gen(i, k) * gen(l, j) == gen(l, j) * gen(i, k)
            assert gen(i, j) * gen(l, k) - gen(l, k) * gen(i, j) == gen(i, k) * gen(l, j) * (q - q_inv)


def test_two_by_two_minor(alg22):
    det = alg22.quantum_minor((1, 2), (1, 2))
    assert det == alg22.monomial((1, 0, 0, 1)) - alg22.monomial((0, 1, 1, 0), q)
    assert str(det) == "x11 x22 - q x12 x21"
    assert alg22.quantum_minor((1,), (1,)) == alg22.generator(1, 1)
    assert quantum_minor(alg22, (1, 2), (1, 2)) is det


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3)])
def test_minor_variants_agree(m, n):
    algebra = get_algebra(m, n)
    for k in range(1, min(m, n) + 1):
        for rows in itertools.combinations(range(1, m + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                assert algebra.quantum_minor(rows, cols, "first") == algebra.quantum_minor(rows, cols, "second")


def test_minor_rejects_bad_index_sets(alg22):
    with pytest.raises(DomainError):
        alg22.quantum_minor((2, 1), (1, 2))
    with pytest.raises(DomainError):
        alg22.quantum_minor((1, 2), (1,))
    with pytest.raises(DomainError):
        alg22.quantum_minor((1, 3), (1, 2))
    with pytest.raises(DomainError):
        alg22.quantum_minor((1,), (1,), "third")


@pytest.mark.parametrize("size", [2, 3])
def test_determinant_is_central(size):
    algebra = get_algebra(size, size)
    det = algebra.determinant()
    for a, b in algebra.generators():
        x = algebra.generator(a, b)
        assert det * x == x * det


def test_determinant_needs_square(alg12):
    with pytest.raises(DomainError):
        alg12.determinant()


def test_torus_weight(alg22, x22):
    assert torus_weight(x22["x12"]) == (1, 0, 0, -1)
    assert torus_weight(alg22.determinant()) == (1, 1, -1, -1)
    assert isinstance(torus_weight(x22["x11"] + x22["x12"]), Inhomogeneous)
    assert torus_weight(alg22.zero()) == (0, 0, 0, 0)


def test_q_degree(alg22, x22):
    assert q_degree(x22["x11"]) == RootElt((0, -1, 0))
    assert q_degree(x22["x11"] * x22["x22"]) == RootElt((-1, -2, -1))
    assert q_degree(alg22.determinant()) == RootElt((-1, -2, -1))
    report = q_degree(x22["x11"] + x22["x22"])
    assert isinstance(report, Inhomogeneous)
    assert "inhomogeneous" in str(report)


def test_associativity(alg22, rng, make_element):
    for _ in range(500):
        a, b, c = (make_element(alg22, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_associativity_rectangular(rng, make_element):
    algebra = get_algebra(2, 3)
    for _ in range(30):
        a, b, c = (make_element(algebra, rng, max_degree=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_distributivity(alg22, rng, make_element):
    for _ in range(30):
        a, b, c = (make_element(alg22, rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c


def test_parse_round_trip(alg22, alg33, rng, make_element):
    assert alg22.parse("x11 x22 - q x12 x21") == alg22.determinant()
    for _ in range(20):
        u = make_element(alg22, rng)
        assert alg22.parse(str(u)) == u
    for rows in itertools.combinations(range(1, 4), 2):
        minor = alg33.quantum_minor(rows, (1, 3))
        assert alg33.parse(str(minor)) == minor


def test_parse_rejects_garbage(alg22):
    with pytest.raises(DomainError):
        alg22.parse("x11 +* y")


def test_apply_pact(alg33):
    x11 = alg33.generator(1, 1)
    assert apply_pact(Weight.zero(5), x11) == x11
    assert apply_pact(omega(3, 5), x11) == x11 * q_inv
    assert apply_pact(omega(1, 5), x11) == x11


def test_mixing_algebras_is_rejected(alg22, alg33):
    with pytest.raises(DomainError):
        alg22.generator(1, 1) + alg33.generator(1, 1)


def test_generator_range(alg22):
    with pytest.raises(DomainError):
        alg22.generator(3, 1)
    assert alg22.var_name(alg22.index(2, 1)) == "x21"
    assert alg22.generators() == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_leading_term(alg22, x22):
    det = alg22.determinant()
    assert det.leading_monomial() == (1, 0, 0, 1)
    assert det.leading_coeff() == 1
    assert (det * q).monic() == det
    with pytest.raises(DomainError):
        alg22.zero().leading_monomial()
