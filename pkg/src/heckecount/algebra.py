"""
The Hecke algebra H_kappa over Z[hbar] in its standard basis {T_w}.

Multiplication is generated by the left action of T_i on the basis:

    T_i T_w = T_{s_i w}               if l(s_i w) = l(w) + 1
    T_i T_w = T_{s_i w} + hbar T_w    if l(s_i w) = l(w) - 1

The classical statement of this rule is sometimes printed with the strict
conditions ``l(s_i w) > l(w) + 1`` / ``l(s_i w) < l(w) - 1``; no permutation
satisfies either, because left multiplication by s_i changes the length by
exactly one. The two branches above are the only reading consistent with
T_i^2 = 1 + hbar T_i.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import kernel as _kernel
from ._tables import GroupTables, group_tables
from .hbar import ONE, ZERO, HbarPoly, Scalar
from .perm import Permutation, identity, left_multiply_simple, reduced_word, simple

__all__ = [
    "HeckeElement", "basis", "add_elem", "left_mul_gen", "mul",
    "specialize_hbar0", "structure_constants", "StructureTable",
    "ResourceGuardError", "DEFAULT_KAPPA_GUARD",
]

DEFAULT_KAPPA_GUARD = 8


class ResourceGuardError(RuntimeError):
    """A request would materialize more of S_kappa than the configured guard allows."""


class HeckeElement:
    """
    A finite sum of c_w T_w with c_w in Z[hbar], for a fixed kappa.

    Zero coefficients are never stored. Iteration, equality and serialization
    all use lexicographic order of the permutations.
    """

    __slots__ = ("kappa", "_terms")

    def __init__(self, kappa: int, terms: Mapping[Permutation, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Permutation, HbarPoly] = {}
        for w, c in items:
            w = w if isinstance(w, Permutation) else Permutation(w)
            if len(w) != kappa:
                raise ValueError(f"term {w} does not live in S_{kappa}")
            c = HbarPoly.coerce(c)
            if w in clean:
                c = clean[w] + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.kappa = kappa
        self._terms = clean

    @classmethod
    def _raw(cls, kappa: int, terms: dict[Permutation, HbarPoly]) -> HeckeElement:
        x = object.__new__(cls)
        x.kappa = kappa
        x._terms = terms
        return x

    @classmethod
    def zero(cls, kappa: int) -> HeckeElement:
        return cls._raw(kappa, {})

    @classmethod
    def one(cls, kappa: int) -> HeckeElement:
        return basis(identity(kappa))

    @property
    def terms(self) -> dict[Permutation, HbarPoly]:
        """A sorted copy of the term map."""
        return dict(sorted(self._terms.items()))

    def coefficient(self, w: Permutation) -> HbarPoly:
        return self._terms.get(w, ZERO)

    def support(self) -> list[Permutation]:
        return sorted(self._terms)

    def items(self) -> Iterator[tuple[Permutation, HbarPoly]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.kappa == other.kappa and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.kappa, frozenset(self._terms.items())))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        return add_elem(self, other)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._raw(self.kappa, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return add_elem(self, -other)

    def scale(self, c: Scalar) -> HeckeElement:
        c = HbarPoly.coerce(c)
        if not c:
            return HeckeElement.zero(self.kappa)
        return HeckeElement._raw(self.kappa, {w: c * x for w, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self) -> str:
        return f"HeckeElement({self.kappa}, {self.render(ascii=True)})"

    def render(self, ascii: bool = False) -> str:
        """Text form such as ``T_id + ħ·T_[2,1]``."""
        symbol = "h" if ascii else "ħ"
        dot = "*" if ascii else "·"
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            name = "T_id" if w == identity(self.kappa) else "T_[" + ",".join(map(str, w)) + "]"
            nonzero = [(d, a) for d, a in enumerate(c.coeffs) if a]
            if nonzero == [(0, 1)]:
                text = name
            elif len(nonzero) == 1:
                text = c.render(symbol) + dot + name
            else:
                text = "(" + c.render(symbol) + ")" + dot + name
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "terms": [{"perm": list(w), "coeffs": c.to_json()} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> HeckeElement:
        kappa = int(data["kappa"])
        return cls(kappa, [(Permutation(t["perm"]), HbarPoly.from_json(t["coeffs"])) for t in data["terms"]])


def basis(w: Permutation) -> HeckeElement:
    """The standard basis element 1 * T_w."""
    w = w if isinstance(w, Permutation) else Permutation(w)
    return HeckeElement._raw(len(w), {w: ONE})


def _check_kappa(a: HeckeElement, b: HeckeElement) -> None:
    if a.kappa != b.kappa:
        raise ValueError(f"kappa mismatch: {a.kappa} != {b.kappa}")


def add_elem(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    _check_kappa(a, b)
    out = dict(a._terms)
    for w, c in b._terms.items():
        s = out[w] + c if w in out else c
        if s:
            out[w] = s
        else:
            del out[w]
    return HeckeElement._raw(a.kappa, out)


def left_mul_gen(i: int, x: HeckeElement) -> HeckeElement:
    """T_i * x."""
    if not 1 <= i <= x.kappa - 1:
        raise ValueError(f"generator T_{i} out of range for kappa={x.kappa}")
    out: dict[Permutation, HbarPoly] = {}
    for w, c in x._terms.items():
        t, rises = left_multiply_simple(i, w)
        out[t] = out[t] + c if t in out else c
        if not rises:
            hc = c.shift(1)
            out[w] = out[w] + hc if w in out else hc
    return HeckeElement._raw(x.kappa, {w: c for w, c in out.items() if c})


@functools.lru_cache(maxsize=65536)
def _word(u: Permutation) -> tuple[int, ...]:
    return reduced_word(u).letters


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """
    The product a * b.

    Each term c T_u of ``a`` is expanded along ``reduced_word(u)`` and the
    generators act on ``b`` from the rightmost letter outwards.
    """
    _check_kappa(a, b)
    acc = HeckeElement.zero(a.kappa)
    for u, c in a._terms.items():
        y = b
        for i in reversed(_word(u)):
            y = left_mul_gen(i, y)
        acc = add_elem(acc, y.scale(c))
    return acc


def specialize_hbar0(x: HeckeElement) -> dict[Permutation, int]:
    """Set hbar = 0: the image of x in the group ring Z[S_kappa]."""
    return {w: c[0] for w, c in x.items() if c[0]}


@dataclass(frozen=True, eq=False)
class StructureTable:
    """
    All products T_u T_v for u, v in S_kappa, held as compact arrays.

    ``rows[r]`` stores the kernel output for u = perms[r]; individual products
    are materialized as HeckeElements on demand.
    """
    kappa: int
    tables: GroupTables
    rows: tuple[tuple[np.ndarray, np.ndarray, np.ndarray], ...]

    @property
    def perms(self) -> list[Permutation]:
        return self.tables.perms

    def __len__(self) -> int:
        """Number of (u, v) cells."""
        return self.tables.size ** 2

    def _cell(self, ru: int, rv: int) -> Iterator[tuple[int, HbarPoly]]:
        offsets, targets, coeffs = self.rows[ru]
        for k in range(offsets[rv], offsets[rv + 1]):
            yield int(targets[k]), HbarPoly(coeffs[k].tolist())

    def product(self, u: Permutation, v: Permutation) -> HeckeElement:
        idx = self.tables.index
        perms = self.tables.perms
        return HeckeElement._raw(self.kappa, {perms[w]: c for w, c in self._cell(idx[u], idx[v])})

    def __getitem__(self, key: tuple[Permutation, Permutation]) -> HeckeElement:
        return self.product(*key)

    def coefficient(self, u: Permutation, v: Permutation, w: Permutation) -> HbarPoly:
        return self.product(u, v).coefficient(w)

    def entries(self) -> Iterator[tuple[Permutation, Permutation, Permutation, HbarPoly]]:
        """Nonzero c^w_{uv}, sorted by (u, v, w)."""
        perms = self.tables.perms
        for ru in range(self.tables.size):
            for rv in range(self.tables.size):
                for rw, c in self._cell(ru, rv):
                    yield perms[ru], perms[rv], perms[rw], c

    def nnz(self) -> int:
        return sum(len(r[1]) for r in self.rows)


def check_guard(kappa: int, guard: int | None) -> None:
    limit = DEFAULT_KAPPA_GUARD if guard is None else guard
    if kappa < 1:
        raise ValueError("kappa must be positive")
    if kappa > limit:
        raise ResourceGuardError(
            f"kappa={kappa} exceeds the guard kappa <= {limit}; a full table has "
            f"({kappa}!)^2 cells. Raise the guard explicitly to proceed."
        )


def structure_row(tables: GroupTables, ru: int, kernel: str | None = None):
    """Kernel output (offsets, targets, coeffs) for u = tables.perms[ru]."""
    word = tables.word(ru)
    ndeg = len(word) + 1
    offsets, targets, coeffs = _kernel.get_kernel(kernel).row_products(word, tables.succ, tables.rises, ndeg)
    # coefficients are bounded by 2^l(u); int32 halves the footprint at kappa=6
    if coeffs.size and np.abs(coeffs).max() < 2**31:
        coeffs = coeffs.astype(np.int32)
    return offsets, targets, coeffs


def structure_constants(kappa: int, guard: int | None = None, kernel: str | None = None) -> StructureTable:
    """
    Every product T_u T_v in S_kappa.

    ``guard`` caps kappa (default 8); exceeding it raises ResourceGuardError.
    ``kernel`` picks "compiled" or "python"; default is the active kernel.
    """
    check_guard(kappa, guard)
    tables = group_tables(kappa)
    rows = tuple(structure_row(tables, ru, kernel) for ru in range(tables.size))
    return StructureTable(kappa, tables, rows)


def generator(kappa: int, i: int) -> HeckeElement:
    return basis(simple(kappa, i))
