import itertools
import random

import pytest
from hypothesis import given, strategies as st

from heckecount.perm import (
    DoubleCosetDecomp, Family, Permutation, Word, all_permutations, chain, compose,
    double_coset_decompose, double_coset_shapes, embed, from_word, identity,
    inverse, is_simple_involution_product, length, parse_permutation,
    reduced_word, restrict, simple, top_coset_decompose,
)

from oracles import cayley_distances

P = Permutation


def test_compose_examples():
    w = P((3, 1, 2))
    assert compose(identity(3), w) == w
    assert compose(P((2, 1)), P((2, 1))) == P((1, 2))
    # s1 sends 1->2, 2->1, 3->3; then s2 sends 2->3, 1->1, 3->2
    assert compose(simple(3, 2), simple(3, 1)) == P((3, 1, 2))


def test_compose_kappa_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse(P((2, 1))) == P((2, 1))
    assert inverse(P((3, 1, 2))) == P((2, 3, 1))


def test_length_examples():
    assert length(identity(5)) == 0
    assert all(length(simple(5, i)) == 1 for i in range(1, 5))
    assert length(P((3, 2, 1))) == 3


def test_reduced_word_examples():
    assert reduced_word(identity(3)).letters == ()
    assert reduced_word(P((2, 1))).letters == (1,)
    assert reduced_word(P((3, 1, 2))).letters == (2, 1)


def test_from_word_examples():
    assert from_word(3, []) == identity(3)
    assert from_word(2, [1]) == P((2, 1))
    assert from_word(3, [2, 1]) == P((3, 1, 2))
    with pytest.raises(ValueError):
        from_word(3, [3])
    with pytest.raises(ValueError):
        Word(3, (0,))


def test_permutation_validation():
    with pytest.raises(ValueError):
        P((1, 1, 2))
    with pytest.raises(ValueError):
        P((0, 1))
    assert P((2, 1)).kappa == 2
    assert P((2, 3, 1))(1) == 2


@pytest.mark.parametrize("kappa", range(1, 7))
def test_length_is_word_distance(kappa):
    dist = cayley_distances(kappa)
    for w in all_permutations(kappa):
        assert length(w) == dist[tuple(w)]


@pytest.mark.parametrize("kappa", range(2, 7))
def test_simple_changes_length_by_one(kappa):
    for w in all_permutations(kappa):
        for i in range(1, kappa):
            assert abs(length(compose(simple(kappa, i), w)) - length(w)) == 1


@pytest.mark.parametrize("kappa", range(1, 7))
def test_reduced_word_roundtrip(kappa):
    for w in all_permutations(kappa):
        word = reduced_word(w)
        assert from_word(kappa, word) == w
        assert len(word) == length(w)


def test_reduced_word_strips_largest_descent():
    w = P((4, 3, 2, 1))
    letters = reduced_word(w).letters
    assert letters[0] == 3
    assert reduced_word(from_word(4, letters[1:])).letters == letters[1:]


def test_top_coset_examples():
    d = top_coset_decompose(identity(3))
    assert (d.w_prime, d.m) == (identity(3), 0)
    d = top_coset_decompose(P((2, 1, 3)))
    assert (d.w_prime, d.m) == (simple(3, 1), 0)
    d = top_coset_decompose(P((3, 1, 2)))
    assert (d.w_prime, d.m) == (identity(3), 2)


@pytest.mark.parametrize("kappa", range(1, 8))
def test_top_coset_invariants(kappa):
    for w in all_permutations(kappa):
        d = top_coset_decompose(w)
        assert d.w_prime[-1] == kappa
        assert 0 <= d.m <= kappa - 1
        assert d.m == kappa - inverse(w)(kappa)
        assert d.reconstruct() == w
        assert length(w) == length(d.w_prime) + d.m


def test_double_coset_examples():
    d = double_coset_decompose(identity(3))
    assert (d.family, d.w_double_prime, d.m, d.l) == (Family.F1, identity(3), 1, 0)
    d = double_coset_decompose(simple(3, 2))
    assert (d.family, d.w_double_prime, d.m, d.l) == (Family.F2, identity(3), 1, 0)
    d = double_coset_decompose(P((2, 3, 1)))
    assert (d.family, d.w_double_prime, d.m, d.l) == (Family.F1, identity(3), 2, 1)


def test_double_coset_needs_two_strands():
    with pytest.raises(ValueError):
        double_coset_decompose(identity(1))


@pytest.mark.parametrize("kappa", range(2, 7))
def test_double_coset_bijection(kappa):
    shapes = list(double_coset_shapes(kappa))
    assert len(shapes) == kappa * (kappa - 1)
    inner = all_permutations(kappa - 2) if kappa > 2 else [P(())]
    images = {}
    for family, m, l in shapes:
        for v in inner:
            d = DoubleCosetDecomp(family, embed(v, kappa), m, l)
            w = d.reconstruct()
            assert w not in images
            images[w] = d
    group = all_permutations(kappa)
    assert set(images) == set(group)
    assert len(group) == 2 * len(inner) * kappa * (kappa - 1) // 2
    for w in group:
        d = double_coset_decompose(w)
        assert images[w] == d
        assert length(w) == length(d.w_double_prime) + len(d.tail())


def test_chain_conventions():
    assert chain(3, 1) == (3, 2, 1)
    assert chain(2, 3) == ()
    assert chain(2, 2) == (2,)


def test_simple_involution_products():
    assert is_simple_involution_product(identity(4))
    assert is_simple_involution_product(P((2, 1, 4, 3)))
    assert not is_simple_involution_product(P((3, 1, 2)))
    assert not is_simple_involution_product(P((3, 2, 1)))


@pytest.mark.parametrize("kappa", range(1, 8))
def test_simple_involution_brute_force(kappa):
    # oracle: products of subsets of pairwise non-adjacent generators
    expected = set()
    for r in range(kappa):
        for subset in itertools.combinations(range(1, kappa), r):
            if all(b - a >= 2 for a, b in zip(subset, subset[1:])):
                expected.add(from_word(kappa, subset))
    got = {w for w in all_permutations(kappa) if is_simple_involution_product(w)}
    assert got == expected


def test_embed_restrict():
    w = P((2, 1))
    assert embed(w, 4) == P((2, 1, 3, 4))
    assert restrict(embed(w, 4), 2) == w
    with pytest.raises(ValueError):
        restrict(P((1, 3, 2)), 2)


def test_parse_permutation():
    assert parse_permutation("3 1 2") == P((3, 1, 2))
    assert parse_permutation("[3,1,2]") == P((3, 1, 2))
    assert parse_permutation("s2,s1", 3) == P((3, 1, 2))
    assert parse_permutation("s1", 2) == P((2, 1))
    assert parse_permutation("id", 3) == identity(3)
    for bad in ("s0", "s1,x", "1 1", "s4"):
        with pytest.raises(ValueError):
            parse_permutation(bad, 3)
    with pytest.raises(ValueError):
        parse_permutation("1 2", 3)
    with pytest.raises(ValueError):
        parse_permutation("s1")


def perms(max_kappa=8):
    return st.integers(1, max_kappa).flatmap(
        lambda k: st.permutations(range(1, k + 1)).map(P)
    )


def triples(max_kappa=8):
    return st.integers(1, max_kappa).flatmap(
        lambda k: st.tuples(*[st.permutations(range(1, k + 1)).map(P)] * 3)
    )


@given(triples())
def test_compose_associative(t):
    u, v, w = t
    assert compose(compose(u, v), w) == compose(u, compose(v, w))


@given(perms())
def test_inverse_two_sided(w):
    e = identity(len(w))
    assert compose(w, inverse(w)) == e
    assert compose(inverse(w), w) == e


def test_randomized_group_laws():
    rng = random.Random(0)
    for _ in range(1000):
        k = rng.randint(1, 8)
        u, v, w = (P(rng.sample(range(1, k + 1), k)) for _ in range(3))
        assert compose(compose(u, v), w) == compose(u, compose(v, w))
        assert compose(u, inverse(u)) == identity(k) == compose(inverse(u), u)
