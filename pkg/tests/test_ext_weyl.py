"""Extended affine Weyl groups: group law, length, words, Bruhat order, partitions."""

import functools

import pytest
from hypothesis import given, strategies as st

import kkschur.ext_weyl as X
from kkschur.root_data import type_a_gl, type_a_pgl, type_a_sl, type_c_adjoint
from kkschur.symseries import partitions

GL3 = type_a_gl(3)


def words(d, max_len=6):
    return st.lists(st.sampled_from(d.affine_index_set), max_size=max_len)


@functools.lru_cache(maxsize=None)
def bfs_lengths(d, depth):
    """Word-length oracle: breadth-first search from the identity."""
    dist = {X.identity(d): 0}
    frontier = [X.identity(d)]
    for k in range(1, depth + 1):
        nxt = []
        for w in frontier:
            for i in d.affine_index_set:
                v = w * X.simple_reflection(d, i)
                if v not in dist:
                    dist[v] = k
                    nxt.append(v)
        frontier = nxt
    return dist


def bruhat_oracle(v, w):
    """Lifting property: if s w < w then v ≤ w iff min(v, s v) ≤ s w."""
    if w.length() == 0:
        return v == w
    d = w.datum
    i = X.left_descents(w)[0]
    s = X.simple_reflection(d, i)
    sv = s * v
    low = sv if sv.length() < v.length() else v
    return bruhat_oracle(low, s * w)


def test_simple_relations():
    s0 = X.simple_reflection(GL3, 0)
    assert s0 * s0 == X.identity(GL3)
    theta = X.finite_element(GL3, GL3.reflection(GL3.theta))
    assert s0 * theta == X.translation(GL3, GL3.theta_coroot)
    assert X.tau(GL3) ** 3 == X.translation(GL3, (1, 1, 1))


def test_lengths():
    assert X.identity(GL3).length() == 0
    assert X.tau(GL3).length() == 0
    assert X.translation(GL3, GL3.theta_coroot).length() == 4


@pytest.mark.parametrize("d", [type_a_gl(3), type_a_sl(4), type_c_adjoint(2)])
def test_length_matches_breadth_first_search(d):
    for w, k in bfs_lengths(d, 4).items():
        assert w.length() == k


@given(words(GL3), words(GL3))
def test_group_law_associative_with_inverse(a, b):
    u, v = X.from_word(GL3, a), X.from_word(GL3, b)
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u * u.inverse() == X.identity(GL3)


@given(words(GL3, 8), st.sampled_from(["left_min", "left_max", "right_min", "right_max"]))
def test_reduced_words(word, strategy):
    w = X.from_word(GL3, word, X.tau(GL3))
    aw = X.reduced_word(w, strategy)
    assert aw.evaluate() == w
    assert len(aw.word) == w.length()
    assert X.is_reduced(GL3, aw.word)


def test_identity_word():
    aw = X.reduced_word(X.identity(GL3))
    assert aw.word == () and aw.pi_power == 0


def test_grassmannian_predicate():
    assert X.is_grassmannian(X.simple_reflection(GL3, 0))
    assert not X.is_grassmannian(X.simple_reflection(GL3, 1))


def test_bruhat_ideal_example():
    s0, s1 = X.simple_reflection(GL3, 0), X.simple_reflection(GL3, 1)
    assert X.bruhat_ideal(s1 * s0) == {X.identity(GL3), s0, s1, s1 * s0}


def test_bruhat_against_lifting_oracle():
    elems = [w for w, k in bfs_lengths(GL3, 4).items() if k <= 4 and X.fundamental_part(w).is_identity()]
    for w in elems:
        if w.length() < 3:
            continue
        ideal = X.bruhat_ideal(w)
        for v in elems:
            assert (v in ideal) == bruhat_oracle(v, w)


@pytest.mark.parametrize("n", [3, 4])
def test_grassmannian_count_is_bounded_partition_count(n):
    # affine Grassmannian elements of length L ↔ (n-1)-bounded partitions of L
    for L in range(6):
        assert len(X.grassmannian_elements(type_a_gl(n), L)) == len(partitions(L, n - 1))


@pytest.mark.parametrize("n", [3, 4])
def test_partition_round_trip(n):
    d = type_a_gl(n)
    for s in range(7):
        for lam in partitions(s, n - 1):
            w = X.partition_to_grassmannian(d, lam)
            assert X.is_grassmannian(w) and w.length() == s
            assert X.grassmannian_to_partition(w) == lam


def test_partition_examples():
    assert X.partition_to_grassmannian(GL3, ()).is_identity()
    for i in (1, 2):
        d = type_a_pgl(3)
        assert X.partition_to_grassmannian(d, X.rectangle(3, i)) == X.kappa(d, i)


def test_infinite_words():
    assert X.infinite_partition_to_element(()) == ()
    assert X.infinite_partition_to_element((1,)) == (0,)
    for s in range(7):
        for lam in partitions(s):
            assert X.infinite_word_to_partition(X.infinite_partition_to_element(lam)) == lam


def test_recorded_infinite_word_has_eight_letters():
    # the recorded word for (4,2,2,1) is one letter short: it encodes (3,2,2,1)
    assert X.infinite_word_to_partition((-3, -1, -2, 0, -1, 2, 1, 0)) == (3, 2, 2, 1)
    assert X.infinite_partition_to_element((4, 2, 2, 1)) == (-3, -1, -2, 0, -1, 3, 2, 1, 0)


def test_rho_and_rho_prime():
    assert X.rho(GL3, 1) == X.rho_prime(GL3, 1) == X.simple_reflection(GL3, 0)


def test_kappa_examples():
    c3 = type_c_adjoint(3)
    assert X.reduced_word(X.kappa(c3, 1), "right_max").word == (1, 2, 3, 2, 1, 0)
    assert X.reduced_word(X.kappa(c3, 2), "right_max").word == (2, 3, 2, 1, 0) * 2
    assert X.reduced_word(X.kappa(c3, 3), "right_max").word == (0, 1, 0, 2, 1, 0)
    assert X.grassmannian_word(6, (2, 2, 2, 2)) == (4, 3, 5, 4, 0, 5, 1, 0)
    assert X.from_word(type_a_pgl(6), (4, 3, 5, 4, 0, 5, 1, 0)) == X.kappa(type_a_pgl(6), 2)


def test_pgl3_factorization_of_recorded_word():
    d = type_a_pgl(3)
    w = X.from_word(d, (2, 0, 1, 0, 2, 1, 0))
    u, gamma = X.grassmannian_decomposition(w)
    w1, w2 = d.fundamental_coweight(1), d.fundamental_coweight(2)
    assert u == X.simple_reflection(d, 1).perm
    assert gamma == d.normalize_coweight([-2 * a - 2 * b for a, b in zip(w1, w2)])
    assert X.gamma_u(d, u) == d.normalize_coweight([-a for a in w1])
    irreducible, rest = X.irreducible_factorization(w)
    assert irreducible * rest == w


def test_star_involution():
    d = type_a_sl(3)
    assert X.star_involution(X.simple_reflection(d, 1)) == X.simple_reflection(d, 2)
    assert X.star_involution(X.simple_reflection(d, 0)) == X.simple_reflection(d, 0)


@given(words(GL3, 8))
def test_star_involution_preserves_length(word):
    w = X.from_word(GL3, word)
    assert X.star_involution(w).length() == w.length()
    assert X.star_involution(X.star_involution(w)) == w


def test_parse_literals():
    assert X.parse_element(GL3, "t:[1,0,-1];perm:[1,2,3]") == X.translation(GL3, (1, 0, -1))
    assert X.parse_element(GL3, "word:pi^0:0") == X.simple_reflection(GL3, 0)
    assert X.parse_element(GL3, "word:pi^1:") == X.tau(GL3)
    assert X.parse_element(GL3, "lambda:2,1") == X.partition_to_grassmannian(GL3, (2, 1))
    with pytest.raises(ValueError):
        X.parse_element(GL3, "nonsense")


def test_root_as_conjugate():
    u, j = X.root_as_conjugate(GL3, (1, 0, -1))
    assert GL3.reflection((1, 0, -1)) is not None
    assert X.finite_element(GL3, u).act_on_weight(GL3.simple_root(j)) == (1, 0, -1)
