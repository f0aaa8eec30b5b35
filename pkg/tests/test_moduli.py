import pytest

from heckecount.algebra import HeckeElement, basis, mul
from heckecount.hbar import HBAR, ONE
from heckecount.moduli import (
    ModuliQuery, UnsupportedLeftFactorError, _candidates, curve_count,
    geometric_product, supported_left_factors,
)
from heckecount.perm import (
    Permutation, all_permutations, from_word, identity, length, simple,
    top_coset_decompose,
)

P = Permutation


def count(w1, w2, w3, chi):
    return curve_count(ModuliQuery(P(w1), P(w2), P(w3), chi))


def test_base_two_strands():
    e, s = (1, 2), (2, 1)
    assert count(e, e, e, 2) == 1
    assert count(s, s, s, 1) == 1
    assert all(count(e, e, s, chi) == 0 for chi in range(-3, 3))
    assert count(e, s, s, 2) == count(s, e, s, 2) == count(s, s, e, 2) == 1
    assert count(s, s, e, 1) == 0
    assert count(s, s, s, 2) == 0


def test_base_one_strand():
    assert count((1,), (1,), (1,), 1) == 1
    assert count((1,), (1,), (1,), 0) == 0


def test_top_swap_reduction_example():
    # F2 -> F1 branch drops chi by two and lands on one strand
    assert count((1, 3, 2), (1, 3, 2), (1, 2, 3), 3) == 1
    assert count((1, 3, 2), (1, 3, 2), (1, 3, 2), 2) == 1
    assert count((1, 3, 2), (1, 3, 2), (1, 3, 2), 3) == 0


def test_query_validation():
    with pytest.raises(ValueError):
        ModuliQuery(P((1, 2)), P((1, 2)), P((1, 2)), 3)
    with pytest.raises(ValueError):
        ModuliQuery(P((1, 2)), P((1, 2, 3)), P((1, 2)), 1)
    with pytest.raises(UnsupportedLeftFactorError):
        count((3, 1, 2), (1, 2, 3), (3, 1, 2), 3)


def test_geometric_product_examples():
    e2, s1 = identity(2), simple(2, 1)
    assert geometric_product(s1, s1).result == HeckeElement(2, {e2: ONE, s1: HBAR})
    s2s1 = from_word(3, [2, 1])
    assert geometric_product(simple(3, 1), s2s1).result == basis(from_word(3, [1, 2, 1]))
    for k in range(1, 6):
        for w in all_permutations(k):
            assert geometric_product(identity(k), w).result == basis(w)


def test_geometric_product_errors():
    with pytest.raises(UnsupportedLeftFactorError) as info:
        geometric_product(P((3, 1, 2)), simple(3, 1))
    assert "unsupported left factor" in str(info.value)
    with pytest.raises(ValueError):
        geometric_product(identity(2), identity(3))


def test_trace():
    gp = geometric_product(simple(2, 1), simple(2, 1), trace=True)
    assert gp.count_trace == [(P((1, 2)), 2, 1), (P((2, 1)), 1, 1)]
    assert gp.trace_json() == [{"w3": [1, 2], "chi": 2, "count": 1}, {"w3": [2, 1], "chi": 1, "count": 1}]
    assert geometric_product(simple(2, 1), simple(2, 1)).count_trace is None


def test_supported_left_factors():
    assert supported_left_factors(1) == [P((1,))]
    assert supported_left_factors(2) == [P((1, 2)), P((2, 1))]
    four = supported_left_factors(4)
    assert four == sorted([identity(4), simple(4, 1), simple(4, 2), simple(4, 3), P((2, 1, 4, 3))])
    sizes = [len(supported_left_factors(k)) for k in range(1, 10)]
    assert sizes == [1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        supported_left_factors(0)


@pytest.mark.parametrize("kappa", range(1, 6))
def test_count_invariants_exhaustive(kappa):
    group = all_permutations(kappa)
    for w1 in supported_left_factors(kappa):
        l1 = length(w1)
        fixes_top = w1[-1] == kappa
        for w2 in group:
            alg = mul(basis(w1), basis(w2))
            m2 = top_coset_decompose(w2).m
            for w3 in group:
                coeff = alg.coefficient(w3)
                for chi in range(kappa - l1 - 2, kappa + 1):
                    n = count(w1, w2, w3, chi)
                    assert n in (0, 1)
                    if n:
                        assert 0 <= kappa - chi <= l1
                        if fixes_top:
                            assert top_coset_decompose(w3).m == m2
                    # each count is a coefficient of the algebraic product
                    assert n == coeff[kappa - chi]


@pytest.mark.parametrize("kappa", range(1, 6))
def test_candidate_pruning_is_complete(kappa):
    # brute force over every w3 must find nothing the pruned search misses
    group = all_permutations(kappa)
    for w1 in supported_left_factors(kappa):
        for w2 in group:
            cands = _candidates(w1, w2)
            for w3 in group:
                if w3 not in cands:
                    assert all(count(w1, w2, w3, chi) == 0 for chi in range(kappa - length(w1), kappa + 1))


@pytest.mark.parametrize("kappa", range(1, 6))
def test_backend_agreement(kappa):
    for w1 in supported_left_factors(kappa):
        for w2 in all_permutations(kappa):
            assert geometric_product(w1, w2).result == mul(basis(w1), basis(w2))


@pytest.mark.parametrize("kappa", range(2, 7))
def test_generator_products_have_degree_at_most_one(kappa):
    for i in range(1, kappa):
        for w in all_permutations(kappa):
            for _, c in geometric_product(simple(kappa, i), w).result.items():
                assert c.degree <= 1
