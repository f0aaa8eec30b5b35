"""
Permutations of {1, ..., kappa} in one-line notation, reduced words, and the
coset normal forms used by the curve-count recursion.

Products compose right to left: ``compose(u, v)(i) == u(v(i))``, so that the
Hecke rule ``T_i T_w -> T_{s_i w}`` is ``compose(simple(kappa, i), w)``.

>>> compose(simple(3, 2), simple(3, 1))
Permutation(3, 1, 2)
>>> reduced_word(Permutation((3, 1, 2))).letters
(2, 1)
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Word", "TopCosetDecomp", "DoubleCosetDecomp", "Family",
    "identity", "simple", "compose", "inverse", "length", "reduced_word",
    "from_word", "chain", "top_coset_decompose", "double_coset_decompose",
    "is_simple_involution_product", "all_permutations", "embed", "restrict",
    "parse_permutation", "format_word",
]


class Permutation(tuple):
    """
    A permutation w of {1, ..., kappa}, stored as the tuple (w(1), ..., w(kappa)).

    Being a tuple, it hashes fast and orders lexicographically by one-line
    notation, which is the canonical term order everywhere in the package.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images: Iterable[int]) -> Permutation:
        # skips validation; only for images built by this module
        return super().__new__(cls, images)

    @property
    def kappa(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Permutation{tuple(self)!r}"

    def __str__(self) -> str:
        return " ".join(map(str, self))


@dataclass(frozen=True)
class Word:
    """A word s_{i_1} ... s_{i_l} in the simple transpositions of S_kappa."""
    kappa: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for i in self.letters:
            if not 1 <= i <= self.kappa - 1:
                raise ValueError(f"generator s{i} out of range for kappa={self.kappa}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)


def format_word(letters: Sequence[int]) -> str:
    return ",".join(f"s{i}" for i in letters) if letters else "id"


def identity(kappa: int) -> Permutation:
    return Permutation._trusted(range(1, kappa + 1))


def simple(kappa: int, i: int) -> Permutation:
    """The simple transposition s_i = (i, i+1) in S_kappa."""
    if not 1 <= i <= kappa - 1:
        raise ValueError(f"generator s{i} out of range for kappa={kappa}")
    images = list(range(1, kappa + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation._trusted(images)


def _check_same(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"kappa mismatch: {len(u)} != {len(v)}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return u o v: apply v first, then u."""
    _check_same(u, v)
    return Permutation._trusted(u[x - 1] for x in v)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for pos, val in enumerate(w, 1):
        inv[val - 1] = pos
    return Permutation._trusted(inv)


def length(w: Sequence[int]) -> int:
    """Number of inversions, which is the length of any reduced word for w."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_multiply_simple(i: int, w: Permutation) -> tuple[Permutation, bool]:
    """
    Return ``(s_i o w, rises)`` where ``rises`` says the length went up.

    s_i o w swaps the values i and i+1 in one-line notation; the length rises
    exactly when i sits to the left of i+1 in w.
    """
    images = list(w)
    p = images.index(i)
    q = images.index(i + 1)
    images[p], images[q] = i + 1, i
    return Permutation._trusted(images), p < q


def reduced_word(w: Permutation) -> Word:
    """
    A reduced word for w, built by repeatedly stripping the largest left descent.

    A left descent of w is an i with l(s_i w) < l(w), i.e. i+1 appears before i
    in one-line notation. Taking the largest one each time makes the word
    deterministic, and the tail of ``reduced_word(w)`` is ``reduced_word(s_i w)``.
    """
    letters = []
    images = list(w)
    pos = {v: p for p, v in enumerate(images)}
    while True:
        for i in range(len(images) - 1, 0, -1):
            if pos[i + 1] < pos[i]:
                break
        else:
            break
        letters.append(i)
        p, q = pos[i], pos[i + 1]
        images[p], images[q] = i + 1, i
        pos[i], pos[i + 1] = q, p
    return Word(len(w), tuple(letters))


def from_word(kappa: int, word: Word | Sequence[int]) -> Permutation:
    """Product of simple transpositions; the leftmost letter is applied last."""
    letters = word.letters if isinstance(word, Word) else tuple(word)
    for i in letters:
        if not 1 <= i <= kappa - 1:
            raise ValueError(f"generator s{i} out of range for kappa={kappa}")
    images = list(range(1, kappa + 1))
    # images holds the one-line notation of the suffix product; prepending s_i
    # swaps values i and i+1
    for i in reversed(letters):
        p = images.index(i)
        q = images.index(i + 1)
        images[p], images[q] = i + 1, i
    return Permutation._trusted(images)


def chain(a: int, b: int) -> tuple[int, ...]:
    """Letters of s_a s_{a-1} ... s_b; empty when b > a."""
    return tuple(range(a, b - 1, -1))


def embed(w: Sequence[int], kappa: int) -> Permutation:
    """View w in S_k as an element of S_kappa fixing k+1, ..., kappa."""
    return Permutation._trusted(tuple(w) + tuple(range(len(w) + 1, kappa + 1)))


def restrict(w: Permutation, k: int) -> Permutation:
    """Inverse of ``embed``; w must fix k+1, ..., kappa."""
    if any(w[j] != j + 1 for j in range(k, len(w))):
        raise ValueError(f"{w} does not fix the strands above {k}")
    return Permutation._trusted(w[:k])


@dataclass(frozen=True)
class TopCosetDecomp:
    """w = w_prime o s_{kappa-1} s_{kappa-2} ... s_{kappa-m}, with w_prime fixing kappa."""
    w_prime: Permutation
    m: int

    @property
    def kappa(self) -> int:
        return self.w_prime.kappa

    def tail(self) -> tuple[int, ...]:
        return chain(self.kappa - 1, self.kappa - self.m)

    def reconstruct(self) -> Permutation:
        return compose(self.w_prime, from_word(self.kappa, self.tail()))


@functools.lru_cache(maxsize=1 << 16)
def top_coset_decompose(w: Permutation) -> TopCosetDecomp:
    kappa = len(w)
    m = kappa - inverse(w)(kappa)
    tail = from_word(kappa, chain(kappa - 1, kappa - m))
    return TopCosetDecomp(compose(w, inverse(tail)), m)


class Family(enum.Enum):
    F1 = 1
    F2 = 2

    def __str__(self) -> str:
        return self.name


def double_coset_tail(kappa: int, family: Family, m: int, l: int) -> tuple[int, ...]:
    """
    Letters of the chain part of a double-coset normal form.

    F1: s_{kappa-2} ... s_{kappa-m} . s_{kappa-1} ... s_{kappa-l}
    F2: s_{kappa-1} s_{kappa-2} ... s_{kappa-m} . s_{kappa-1} ... s_{kappa-l}
    """
    if not 0 <= l < m <= kappa - 1:
        raise ValueError(f"need 0 <= l < m <= kappa-1, got m={m}, l={l}")
    first = chain(kappa - 2, kappa - m) if family is Family.F1 else chain(kappa - 1, kappa - m)
    return first + chain(kappa - 1, kappa - l)


@dataclass(frozen=True)
class DoubleCosetDecomp:
    """w = w_double_prime o (family chain with parameters m > l >= 0)."""
    family: Family
    w_double_prime: Permutation
    m: int
    l: int

    @property
    def kappa(self) -> int:
        return self.w_double_prime.kappa

    @property
    def shape(self) -> tuple[Family, int, int]:
        return self.family, self.m, self.l

    def tail(self) -> tuple[int, ...]:
        return double_coset_tail(self.kappa, self.family, self.m, self.l)

    def reconstruct(self) -> Permutation:
        return compose(self.w_double_prime, from_word(self.kappa, self.tail()))


def double_coset_shapes(kappa: int) -> Iterator[tuple[Family, int, int]]:
    for family in Family:
        for m in range(1, kappa):
            for l in range(m):
                yield family, m, l


@functools.lru_cache(maxsize=1 << 16)
def double_coset_decompose(w: Permutation) -> DoubleCosetDecomp:
    """
    Find the unique (family, w'', m, l) with w'' fixing kappa-1 and kappa.

    Tries each of the kappa(kappa-1) chain shapes and keeps the one whose
    quotient w o tail^{-1} lands in S_{kappa-2}.
    """
    kappa = len(w)
    if kappa < 2:
        raise ValueError("double coset decomposition needs kappa >= 2")
    for family, m, l in double_coset_shapes(kappa):
        tail = from_word(kappa, double_coset_tail(kappa, family, m, l))
        candidate = compose(w, inverse(tail))
        if candidate[kappa - 2] == kappa - 1 and candidate[kappa - 1] == kappa:
            return DoubleCosetDecomp(family, candidate, m, l)
    raise AssertionError(f"no double coset normal form for {w}")  # unreachable


def is_simple_involution_product(w: Sequence[int]) -> bool:
    """True iff w is a product of pairwise commuting simple transpositions."""
    j = len(w)
    while j >= 1:
        if w[j - 1] == j:
            j -= 1
        elif j >= 2 and w[j - 1] == j - 1 and w[j - 2] == j:
            j -= 2
        else:
            return False
    return True


def all_permutations(kappa: int) -> list[Permutation]:
    """S_kappa in lexicographic order of one-line notation."""
    return [Permutation._trusted(p) for p in itertools.permutations(range(1, kappa + 1))]


def parse_permutation(text: str, kappa: int | None = None) -> Permutation:
    """
    Parse one-line notation ("3 1 2", "[3,1,2]") or a word ("s2,s1", "id").

    Words need ``kappa``; one-line notation is checked against it when given.
    """
    text = text.strip()
    if text in ("id", "e", ""):
        if kappa is None:
            raise ValueError("identity needs an explicit kappa")
        return identity(kappa)
    if text[0] in "sS":
        if kappa is None:
            raise ValueError("a generator word needs an explicit kappa")
        letters = []
        for tok in text.replace(" ", "").split(","):
            if not tok or tok[0] not in "sS" or not tok[1:].isdigit():
                raise ValueError(f"bad generator {tok!r} in {text!r}")
            letters.append(int(tok[1:]))
        return from_word(kappa, letters)
    cleaned = text.strip("[]()").replace(",", " ")
    try:
        w = Permutation(int(tok) for tok in cleaned.split())
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None
    if kappa is not None and len(w) != kappa:
        raise ValueError(f"{text!r} has {len(w)} strands, expected kappa={kappa}")
    return w
