import itertools

import pytest

from app.errors import DomainError
from app.lattice import (
    RootElt,
    Weight,
    alpha,
    cartan_matrix,
    deg_x,
    epsilon_weight,
    newpact_exponent,
    omega,
    pact_exponent,
    pairing,
    simple_reflect,
    weyl_action,
    wt_eta,
)
from app.weyl import Permutation, coxeter_cm, longest, prefix_set, simple_reflection


def test_cartan_matrix_is_read_only():
    cartan = cartan_matrix(3)
    assert cartan.tolist() == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    with pytest.raises(ValueError):
        cartan[0, 0] = 5


def test_pairing_normalization():
    assert pairing(omega(1, 1), alpha(1, 1)) == 1
    assert pairing(alpha(1, 2).to_weight(), alpha(1, 2)) == 2
    assert pairing(alpha(1, 2).to_weight(), alpha(2, 2)) == -1
    assert pairing(omega(2, 2), alpha(1, 2) + alpha(2, 2)) == 1


def test_pairing_rank_mismatch():
    with pytest.raises(DomainError):
        pairing(omega(1, 2), alpha(1, 3))


def test_simple_reflection_in_rank_one():
    s1 = simple_reflection(1, 2)
    assert weyl_action(s1, omega(1, 1)) == Weight((-1,))
    assert simple_reflect(1, omega(1, 1)) == omega(1, 1) - alpha(1, 1).to_weight()


def test_identity_acts_trivially():
    lam = Weight((3, -1, 2))
    assert weyl_action(Permutation.identity(4), lam) == lam


def test_weyl_action_on_fundamental_weights():
    for images in itertools.permutations(range(1, 5)):
        w = Permutation(images)
        for k in range(1, 4):
            assert weyl_action(w, omega(k, 3)) == epsilon_weight(prefix_set(w, k), 3)


def _apply_word(word, lam):
    for i in reversed(word):
        lam = simple_reflect(i, lam)
    return lam


def test_weyl_action_is_word_independent():
    lam = Weight((2, -1))
    assert _apply_word((1, 2, 1), lam) == _apply_word((2, 1, 2), lam) == weyl_action(longest(3), lam)


def test_wt_eta_examples():
    for k in range(1, 4):
        assert wt_eta(range(1, k + 1), 2, 2) == -omega(k, 3)
    assert wt_eta((2,), 2, 2) == -omega(1, 3) + alpha(1, 3).to_weight()
    assert wt_eta((2,), 2, 2) == Weight((1, -1, 0))
    assert wt_eta((1, 3), 2, 2) == -omega(2, 3) + alpha(2, 3).to_weight()
    assert wt_eta((1, 3), 2, 2) == Weight((-1, 1, -1))


def test_wt_eta_is_minus_epsilon():
    for k in range(1, 4):
        for J in itertools.combinations(range(1, 5), k):
            assert wt_eta(J, 2, 2) == -epsilon_weight(J, 3)


def test_wt_eta_rejects_empty():
    with pytest.raises(DomainError):
        wt_eta((), 2, 2)
    with pytest.raises(DomainError):
        wt_eta((2, 1), 2, 2)


def test_deg_x():
    assert deg_x(1, 1, 1, 1) == RootElt((-1,))
    assert deg_x(1, 1, 2, 2) == -alpha(2, 3)
    assert deg_x(2, 2, 2, 2) == RootElt((-1, -1, -1))
    with pytest.raises(DomainError):
        deg_x(3, 1, 2, 2)


def test_pact_exponent():
    assert pact_exponent(Weight.zero(3), deg_x(2, 1, 2, 2)) == 0
    assert pact_exponent(omega(2, 3), alpha(2, 3)) == 1
    top, _ = coxeter_cm(2, 2)
    mu = -omega(1, 3) - weyl_action(top, omega(1, 3))
    assert pact_exponent(mu, deg_x(1, 1, 2, 2)) == -1


def test_newpact_matches_pact():
    m, n = 2, 3
    for k in range(1, m + n):
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                assert newpact_exponent(k, i, j, m, n) == pact_exponent(omega(k, m + n - 1), deg_x(i, j, m, n))


def test_central_weight_for_determinant():
    top, _ = coxeter_cm(2, 2)
    mu = -omega(2, 3) - weyl_action(top, omega(2, 3))
    assert all(pairing(mu, deg_x(a, b, 2, 2)) == 0 for a in (1, 2) for b in (1, 2))


def test_root_weight_arithmetic():
    gamma = alpha(1, 3) * 2 - alpha(3, 3)
    assert gamma == RootElt((2, 0, -1))
    assert str(gamma) == "[2,0,-1]"
    assert gamma.to_weight() == Weight((4, -1, -2))


def test_simple_reflections_on_roots():
    assert weyl_action(simple_reflection(1, 3), alpha(1, 2)) == -alpha(1, 2)
    assert weyl_action(simple_reflection(1, 3), alpha(2, 2)) == alpha(1, 2) + alpha(2, 2)
    assert weyl_action(longest(3), alpha(1, 2)) == -alpha(2, 2)


def test_root_action_matches_weight_action():
    gamma = RootElt((1, -2, 3))
    for images in itertools.permutations(range(1, 5)):
        w = Permutation(images)
        assert weyl_action(w, gamma).to_weight() == weyl_action(w, gamma.to_weight())


@pytest.mark.parametrize("lam", [omega(1, 3), omega(3, 3), Weight((2, -1, 1))], ids=str)
@pytest.mark.parametrize("gamma", [alpha(2, 3), RootElt((1, 1, 1)), RootElt((1, -2, 3))], ids=str)
def test_pairing_is_weyl_invariant(lam, gamma):
    for images in itertools.permutations(range(1, 5)):
        w = Permutation(images)
        assert pairing(weyl_action(w, lam), weyl_action(w, gamma)) == pairing(lam, gamma)
