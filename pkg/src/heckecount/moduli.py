"""
The curve-count backend.

Products are assembled from counts of holomorphic curves,

    T_{w1} * T_{w2} = sum over (w3, chi) of  #M^chi(w1, w2, w3) * hbar^(kappa - chi) * T_{w3},

where the counts come from two base tables (one and two strands) and two
reduction steps that peel off the top strand or the top two strands of w1.
The reductions only apply when w1 fixes the top strand or swaps the top
two, so the backend accepts exactly the left factors that are products of
commuting simple transpositions and refuses the rest.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional

from .algebra import HeckeElement
from .hbar import HbarPoly, monomial
from .perm import (
    Family, Permutation, compose, double_coset_decompose, double_coset_tail,
    embed, from_word, chain, identity, is_simple_involution_product, length,
    restrict, simple, top_coset_decompose,
)

__all__ = [
    "ModuliQuery", "GeomProduct", "UnsupportedLeftFactorError", "curve_count",
    "geometric_product", "supported_left_factors", "clear_cache",
]


class UnsupportedLeftFactorError(ValueError):
    """The recursion has no rule for this left factor."""

    def __init__(self, w1: Permutation):
        self.w1 = w1
        super().__init__(
            f"unsupported left factor {list(w1)}: the curve-count recursion only "
            "handles products of commuting simple transpositions"
        )


@dataclass(frozen=True)
class ModuliQuery:
    w1: Permutation
    w2: Permutation
    w3: Permutation
    chi: int

    def __post_init__(self):
        if not len(self.w1) == len(self.w2) == len(self.w3):
            raise ValueError("w1, w2, w3 must share kappa")
        if self.chi > len(self.w1):
            raise ValueError(f"chi={self.chi} exceeds kappa={len(self.w1)}")

    @property
    def kappa(self) -> int:
        return len(self.w1)


@dataclass(frozen=True)
class GeomProduct:
    result: HeckeElement
    count_trace: Optional[list[tuple[Permutation, int, int]]] = field(default=None)

    def trace_json(self) -> list[dict]:
        return [{"w3": list(w3), "chi": chi, "count": n} for w3, chi, n in self.count_trace or ()]


_ID2, _S1 = identity(2), simple(2, 1)

# two strands: trivial disks (chi = 2) plus the single chi = 1 curve for T_1 T_1 -> T_1
_BASE2 = frozenset({
    (_ID2, _ID2, _ID2, 2),
    (_ID2, _S1, _S1, 2),
    (_S1, _ID2, _S1, 2),
    (_S1, _S1, _ID2, 2),
    (_S1, _S1, _S1, 1),
})


def _fixes_top(w: Permutation) -> bool:
    return w[-1] == len(w)


def _swaps_top(w: Permutation) -> bool:
    k = len(w)
    return k >= 2 and w[k - 1] == k - 1 and w[k - 2] == k


def _drop_top_swap(w1: Permutation) -> Permutation:
    k = len(w1)
    return restrict(compose(w1, simple(k, k - 1)), k - 2)


# F1 on w2 forces F2 on w3 with chi - 2; F2 on w2 allows F1 (chi - 2) or F2 (chi - 1)
_SWAP_RULES = {
    Family.F1: ((Family.F2, 2),),
    Family.F2: ((Family.F1, 2), (Family.F2, 1)),
}


@functools.lru_cache(maxsize=None)
def _count(w1: Permutation, w2: Permutation, w3: Permutation, chi: int) -> int:
    k = len(w1)
    if k == 1:
        return 1 if chi == 1 else 0
    if k == 2:
        return 1 if (w1, w2, w3, chi) in _BASE2 else 0
    if _fixes_top(w1):
        d2, d3 = top_coset_decompose(w2), top_coset_decompose(w3)
        if d2.m != d3.m:
            return 0
        return _count(restrict(w1, k - 1), restrict(d2.w_prime, k - 1), restrict(d3.w_prime, k - 1), chi - 1)
    if _swaps_top(w1):
        d2, d3 = double_coset_decompose(w2), double_coset_decompose(w3)
        if (d2.m, d2.l) != (d3.m, d3.l):
            return 0
        for family3, drop in _SWAP_RULES[d2.family]:
            if d3.family is family3:
                return _count(
                    _drop_top_swap(w1),
                    restrict(d2.w_double_prime, k - 2),
                    restrict(d3.w_double_prime, k - 2),
                    chi - drop,
                )
        return 0
    raise UnsupportedLeftFactorError(w1)


def curve_count(q: ModuliQuery) -> int:
    """#M^chi(T_w1, T_w2, T_w3); always 0 or 1."""
    if not is_simple_involution_product(q.w1):
        raise UnsupportedLeftFactorError(q.w1)
    return _count(q.w1, q.w2, q.w3, q.chi)


def clear_cache() -> None:
    _count.cache_clear()
    _candidates.cache_clear()


@functools.lru_cache(maxsize=None)
def _candidates(w1: Permutation, w2: Permutation) -> frozenset[Permutation]:
    # every w3 the reductions can reach; a superset of the nonzero counts
    k = len(w1)
    if k == 1:
        return frozenset({w2})
    if k == 2:
        return frozenset(w3 for a, b, w3, _ in _BASE2 if a == w1 and b == w2)
    if _fixes_top(w1):
        d2 = top_coset_decompose(w2)
        tail = from_word(k, chain(k - 1, k - d2.m))
        inner = _candidates(restrict(w1, k - 1), restrict(d2.w_prime, k - 1))
        return frozenset(compose(embed(v, k), tail) for v in inner)
    if _swaps_top(w1):
        d2 = double_coset_decompose(w2)
        inner = _candidates(_drop_top_swap(w1), restrict(d2.w_double_prime, k - 2))
        out = set()
        for family3, _ in _SWAP_RULES[d2.family]:
            tail = from_word(k, double_coset_tail(k, family3, d2.m, d2.l))
            out.update(compose(embed(v, k), tail) for v in inner)
        return frozenset(out)
    raise UnsupportedLeftFactorError(w1)


def geometric_product(w1: Permutation, w2: Permutation, trace: bool = False) -> GeomProduct:
    """
    T_{w1} * T_{w2} from curve counts.

    Only chi in [kappa - l(w1), kappa] is visited: outside that window the
    counts vanish.
    """
    if len(w1) != len(w2):
        raise ValueError(f"kappa mismatch: {len(w1)} != {len(w2)}")
    if not is_simple_involution_product(w1):
        raise UnsupportedLeftFactorError(w1)
    kappa = len(w1)
    terms: dict[Permutation, HbarPoly] = {}
    records = []
    for w3 in sorted(_candidates(w1, w2)):
        coeff = HbarPoly()
        for chi in range(kappa - length(w1), kappa + 1):
            n = _count(w1, w2, w3, chi)
            if n:
                coeff = coeff + monomial(n, kappa - chi)
                records.append((w3, chi, n))
        if coeff:
            terms[w3] = coeff
    result = HeckeElement(kappa, terms)
    return GeomProduct(result, records if trace else None)


def supported_left_factors(kappa: int) -> list[Permutation]:
    """All products of commuting simple transpositions in S_kappa, sorted."""
    if kappa < 1:
        raise ValueError("kappa must be positive")

    @functools.lru_cache(maxsize=None)
    def build(k: int) -> tuple[tuple[int, ...], ...]:
        if k <= 1:
            return (tuple(range(1, k + 1)),)
        out = [w + (k,) for w in build(k - 1)]
        out += [w + (k, k - 1) for w in build(k - 2)]
        return tuple(out)

    return sorted(Permutation._trusted(w) for w in build(kappa))
