import itertools
import random

import pytest

from app.errors import DomainError
from app.groebner import membership, normal_form, two_sided_groebner
from app.lattice import omega, weyl_action, wt_eta
from app.polynormal import (
    delta_index,
    first_normal_generator,
    generating_sequence,
    ideal_basis,
    predicted_scalar,
    proportionality_exponent,
    separating_minor,
    separation_pairs,
    subset_leq,
    upsilon,
    verify_generation,
    verify_height,
    verify_heights,
    verify_polynormal,
    verify_poset,
    verify_separation,
    verify_separation_pair,
)
from app.qcoeff import RatFunc
from app.qmatrix import apply_pact, get_algebra
from app.weyl import Permutation, bruhat_interval, coxeter_cm, simple_reflection


def P(*images):
    return Permutation(images)


E4 = Permutation.identity(4)
S1 = P(2, 1, 3, 4)
S2 = P(1, 3, 2, 4)
S2S1 = P(3, 1, 2, 4)
TOP = P(3, 4, 1, 2)


def test_subset_order():
    assert subset_leq((1, 2), (3, 4))
    assert subset_leq((1, 4), (3, 4))
    assert subset_leq((1, 3), (1, 4))
    assert not subset_leq((2, 3), (1, 4))
    assert not subset_leq((1, 4), (2, 3))
    with pytest.raises(DomainError):
        subset_leq((1,), (1, 2))


def test_upsilon_examples():
    assert upsilon(E4, 2, 2) == []
    assert [index.J for index in upsilon(S1, 2, 2)] == [(1,)]
    assert [index.J for index in upsilon(TOP, 2, 2)] == [
        (1,), (2,), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (1, 2, 3), (1, 2, 4),
    ]


def test_upsilon_rejects_elements_above_top():
    with pytest.raises(DomainError, match=r"y\(\[1,1\]\)"):
        upsilon(P(4, 1, 2, 3), 2, 2)
    with pytest.raises(DomainError):
        upsilon(P(2, 1, 3), 2, 2)


def test_delta_index_examples():
    assert delta_index((1,), 2, 2).rows == (2,)
    assert delta_index((1,), 2, 2).cols == (1,)
    det = delta_index((1, 2), 2, 2)
    assert (det.rows, det.cols) == ((1, 2), (1, 2))
    corner = delta_index((1, 2, 3), 2, 2)
    assert (corner.rows, corner.cols) == ((1,), (2,))
    assert str(corner) == "{1,2,3}"


def test_delta_index_of_top_prefix_is_one(alg22):
    index = delta_index((3, 4), 2, 2)
    assert index.rows == index.cols == ()
    assert index.element(alg22) == alg22.one()


def test_delta_index_rejects_sets_above_top():
    with pytest.raises(DomainError):
        delta_index((4,), 2, 2)
    with pytest.raises(DomainError):
        delta_index((1, 2, 3, 4), 2, 2)


def test_generating_sequences(alg22):
    x = alg22.generator
    det = alg22.determinant()
    assert generating_sequence(E4, 2, 2) == []
    assert [minor for _, minor in generating_sequence(S2, 2, 2)] == [det]
    assert [minor for _, minor in generating_sequence(S2S1, 2, 2)] == [x(2, 1), x(1, 1), det]


def test_dedup_drops_repeated_minors():
    full = generating_sequence(TOP, 2, 2)
    unique = generating_sequence(TOP, 2, 2, dedup=True)
    assert len(full) == 9
    assert len(unique) == 5
    assert [index.J for index, _ in unique] == [(1,), (2,), (1, 2), (1, 3), (2, 3)]


def test_predicted_scalars_for_determinant(alg22):
    det = delta_index((1, 2), 2, 2)
    assert all(predicted_scalar(det, generator, 2, 2) == 0 for generator in alg22.generators())


def test_predicted_scalars_for_corners():
    x21 = delta_index((1,), 2, 2)
    assert predicted_scalar(x21, (1, 1), 2, 2) == -1
    assert predicted_scalar(x21, (2, 2), 2, 2) == 1
    assert predicted_scalar(x21, (1, 2), 2, 2) == 0
    assert predicted_scalar(x21, (2, 1), 2, 2) == 0


@pytest.mark.parametrize("J", [(1,), (1, 2)])
def test_leading_minors_are_normal_in_the_whole_algebra(alg22, J):
    index = delta_index(J, 2, 2)
    u = index.element(alg22)
    for a, b in alg22.generators():
        x = alg22.generator(a, b)
        assert proportionality_exponent(u * x, x * u) == predicted_scalar(index, (a, b), 2, 2)


def test_proportionality_exponent(alg22):
    x = alg22.generator
    assert proportionality_exponent(x(1, 2) * RatFunc.q_power(2), x(1, 2)) == 2
    assert proportionality_exponent(x(1, 2) * 2, x(1, 2)) is None
    assert proportionality_exponent(x(1, 2), x(2, 1)) is None
    assert proportionality_exponent(alg22.zero(), x(1, 1)) is None


@pytest.mark.parametrize("y", bruhat_interval(TOP), ids=str)
def test_polynormal_two_by_two(y):
    cert = verify_polynormal(y, 2, 2)
    assert cert.passed, cert.counterexamples


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 1), (1, 3)])
def test_polynormal_thin_matrices(m, n):
    for y in bruhat_interval(coxeter_cm(m, n)[0]):
        assert verify_polynormal(y, m, n).passed


def test_polynormal_records_scalars():
    cert = verify_polynormal(S2S1, 2, 2)
    assert len(cert.scalars) >= 3 * 4
    assert all(entry["predicted"] == entry["observed"] for entry in cert.scalars)
    assert [w["minor"] for w in cert.witnesses if w["kind"] == "generator"] == ["x21", "x11", "x11 x22 - q x12 x21"]


def test_generation_is_two_sided():
    assert verify_generation(TOP, 2, 2).passed
    assert verify_generation(S2, 2, 2).passed


def test_top_prime_is_augmentation_ideal(alg22):
    basis = ideal_basis(TOP, 2, 2)
    assert basis.elements == tuple(alg22.generator(a, b) for a, b in alg22.generators())


def test_poset_one_by_one():
    cert = verify_poset(1, 1)
    assert cert.passed
    (incidence,) = [w for w in cert.witnesses if w["kind"] == "incidence"]
    assert incidence["order"] == ["1,2", "2,1"]
    assert incidence["rows"] == ["11", "01"]


def test_poset_two_by_two():
    cert = verify_poset(2, 2)
    assert cert.passed
    (incidence,) = [w for w in cert.witnesses if w["kind"] == "incidence"]
    order = incidence["order"]
    row = incidence["rows"][order.index(str(S1))]
    assert row[order.index(str(S2))] == "0"


def test_s1_and_s2_ideals_are_incomparable(alg22):
    assert not membership(alg22.determinant(), ideal_basis(S1, 2, 2))
    assert not membership(alg22.generator(2, 1), ideal_basis(S2, 2, 2))


@pytest.mark.parametrize("y, expected", [(E4, 4), (S2S1, 2), (TOP, 0)])
def test_height_examples(y, expected):
    cert = verify_height(y, 2, 2)
    assert cert.passed
    (witness,) = cert.witnesses
    assert witness["gk_dim"] == expected


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)])
def test_heights_small_sizes(m, n):
    assert verify_heights(m, n).passed


def test_separating_minor_examples(alg22):
    found = separating_minor(E4, S1, 2, 2)
    assert (found.k, found.J) == (1, (1,))
    assert found.element == alg22.generator(2, 1)
    assert found.certificate.passed

    found = separating_minor(E4, S2, 2, 2)
    assert (found.k, found.J) == (2, (1, 2))
    assert found.element == alg22.determinant()
    assert found.certificate.passed

    found = separating_minor(S1, S2S1, 2, 2)
    assert (found.k, found.J) == (1, (2,))
    assert found.element == alg22.generator(1, 1)
    assert found.certificate.passed


def test_separating_minor_needs_strict_order():
    with pytest.raises(DomainError):
        separating_minor(S1, S1, 2, 2)
    with pytest.raises(DomainError):
        separating_minor(S1, S2, 2, 2)


def test_first_normal_generator():
    index, cert = first_normal_generator(S1, S2S1, 2, 2)
    assert index.J == (2,)
    assert cert.passed


def test_separation_pairs():
    covers = separation_pairs(2, 2, "covers")
    everything = separation_pairs(2, 2, "all")
    assert set(covers) <= set(everything)
    assert (E4, S1) in covers
    assert (E4, TOP) in everything and (E4, TOP) not in covers
    with pytest.raises(DomainError):
        separation_pairs(2, 2, "some")


def test_separation_two_by_two():
    assert verify_separation(2, 2).passed
    assert verify_separation_pair(E4, TOP, 2, 2).passed


def test_random_multiples_lie_in_prime(alg22, make_element):
    rng = random.Random(11)
    basis = ideal_basis(S2S1, 2, 2)
    generators = [minor for _, minor in generating_sequence(S2S1, 2, 2)]
    for _ in range(20):
        left = make_element(alg22, rng, max_degree=2)
        right = make_element(alg22, rng, max_degree=2)
        assert membership(left * rng.choice(generators) * right, basis)


@pytest.mark.parametrize("y", [S2S1, S1, TOP], ids=str)
def test_generator_checks_extend_to_products(alg22, make_element, y):
    """u r = (mu . r) u modulo the predecessors for products r, not only generators"""
    rng = random.Random(5)
    top = coxeter_cm(2, 2)[0]
    predecessors = []
    for index, minor in generating_sequence(y, 2, 2):
        staged = two_sided_groebner(predecessors, algebra=alg22)
        mu = wt_eta(index.J, 2, 2) - weyl_action(top, omega(index.k, 3))
        for _ in range(10):
            r = make_element(alg22, rng, max_degree=3)
            assert not normal_form(minor * r - apply_pact(mu, r) * minor, staged)
        predecessors.append(minor)


def test_standard_monomials_survive_quotient(alg22):
    """The quotient by I(s_2 s_1) is a quantum plane in x12, x22"""
    basis = ideal_basis(S2S1, 2, 2)
    x12, x22 = alg22.generator(1, 2), alg22.generator(2, 2)
    for a, b in itertools.product(range(3), repeat=2):
        if a or b:
            assert not membership(x12**a * x22**b, basis)


THREE_BY_THREE = (
    [Permutation.identity(6)]
    + [simple_reflection(i, 6) for i in range(1, 6)]
    + [coxeter_cm(3, 3)[0], P(4, 1, 2, 5, 3, 6), P(1, 4, 2, 5, 3, 6)]
)


@pytest.mark.slow
@pytest.mark.parametrize("y", THREE_BY_THREE, ids=str)
def test_polynormal_three_by_three(y):
    assert verify_polynormal(y, 3, 3).passed
    assert verify_height(y, 3, 3).passed


@pytest.mark.slow
def test_heights_two_by_three():
    assert verify_heights(2, 3).passed
    assert verify_poset(2, 3).passed
