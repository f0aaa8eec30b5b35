"""Exact polynomials in hbar with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Union

__all__ = ["HbarPoly", "add", "mul", "monomial", "eval_at_zero", "ZERO", "ONE", "HBAR"]

Scalar = Union[int, "HbarPoly"]


def _canonical(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class HbarPoly:
    """
    A polynomial sum_d coeffs[d] * hbar^d over the integers.

    Coefficients are Python ints, so arithmetic never wraps. The coefficient
    tuple carries no trailing zeros; the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or int(c) != c:
                raise TypeError(f"coefficient {c!r} is not an integer")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _canonical(cs))

    @classmethod
    def _from_canonical(cls, coeffs: tuple[int, ...]) -> HbarPoly:
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("HbarPoly is immutable")

    @staticmethod
    def coerce(x: Scalar) -> HbarPoly:
        if isinstance(x, HbarPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return HbarPoly._from_canonical((x,) if x else ())
        raise TypeError(f"cannot use {type(x).__name__} as an hbar polynomial")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == HbarPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: Scalar) -> HbarPoly:
        a, b = self.coeffs, HbarPoly.coerce(other).coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return HbarPoly._from_canonical(_canonical(out))

    __radd__ = __add__

    def __neg__(self) -> HbarPoly:
        return HbarPoly._from_canonical(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> HbarPoly:
        return self + (-HbarPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> HbarPoly:
        return HbarPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> HbarPoly:
        try:
            b = HbarPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented
        a = self.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # leading coefficient is a product of nonzero ints, so already canonical
        return HbarPoly._from_canonical(tuple(out))

    __rmul__ = __mul__

    def shift(self, d: int = 1) -> HbarPoly:
        """Multiply by hbar^d."""
        if not self.coeffs:
            return self
        return HbarPoly._from_canonical((0,) * d + self.coeffs)

    def __call__(self, hbar: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * hbar + c
        return acc

    def __repr__(self) -> str:
        return f"HbarPoly({list(self.coeffs)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: list[int]) -> HbarPoly:
        p = cls(data)
        if list(p.coeffs) != list(data):
            raise ValueError(f"non-canonical coefficient list {data!r}")
        return p

    def render(self, symbol: str = "ħ") -> str:
        """Human form, highest degree last: ``1 + 2ħ + ħ^3``."""
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = mag + symbol + ("" if d == 1 else f"^{d}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


ZERO = HbarPoly._from_canonical(())
ONE = HbarPoly._from_canonical((1,))
HBAR = HbarPoly._from_canonical((0, 1))


def add(a: HbarPoly, b: HbarPoly) -> HbarPoly:
    return a + b


def mul(a: HbarPoly, b: HbarPoly) -> HbarPoly:
    return a * b


def monomial(c: int, d: int) -> HbarPoly:
    """c * hbar^d. A negative d would mean chi > kappa, which cannot occur."""
    if d < 0:
        raise ValueError(f"negative hbar exponent {d}")
    if c == 0:
        return ZERO
    return HbarPoly._from_canonical((0,) * d + (int(c),))


def eval_at_zero(a: HbarPoly) -> int:
    return a[0]
