"""
Verification sweeps: coset normal-form coverage, the two-strand table,
backend agreement, and the Hecke relations.

Every suite returns a VerificationReport; a report passes iff it records no
failures. Sweeps visit cases in (length, lexicographic) order, so the first
recorded failure is the smallest one.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import algebra
from .algebra import HeckeElement, basis, left_mul_gen, mul
from .hbar import HBAR, ONE
from .moduli import geometric_product, supported_left_factors
from .perm import (
    DoubleCosetDecomp, Permutation, all_permutations, double_coset_decompose,
    double_coset_shapes, embed, identity, is_simple_involution_product,
    length, reduced_word, simple,
)

__all__ = [
    "VerificationReport", "verify_coset_cover", "verify_prop31",
    "verify_isomorphism", "verify_relations", "geometric_left_mul",
    "geometric_fold_product", "SUITES", "run_suites",
]


@dataclass
class VerificationReport:
    suite: str
    kappa: int
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, inputs: Any, expected: Any, actual: Any) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({"inputs": inputs, "expected": expected, "actual": actual})

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "kappa": self.kappa,
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }

    def render(self, timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite} kappa={self.kappa} checked={self.checked} failures={len(self.failures)}"
        if timing:
            line += f" elapsed_ms={self.elapsed_ms:.1f}"
        if self.failures:
            line += f"\n  first failure: {self.failures[0]}"
        return line


def _timed(suite: str, kappa: int, body: Callable[[VerificationReport], None]) -> VerificationReport:
    report = VerificationReport(suite, kappa)
    start = time.perf_counter()
    body(report)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _by_length(perms: Iterable[Permutation]) -> list[Permutation]:
    return sorted(perms, key=lambda w: (length(w), w))


def _elem_json(x: HeckeElement) -> list:
    return [[list(w), c.to_json()] for w, c in x.items()]


def verify_coset_cover(kappa: int) -> VerificationReport:
    """
    Every (family, w'', m, l) reconstructs a distinct permutation, together
    they exhaust S_kappa, ``double_coset_decompose`` recovers the data, and
    lengths add.
    """
    if not 2 <= kappa <= 7:
        raise ValueError("coset coverage is checked for 2 <= kappa <= 7")

    def body(report: VerificationReport) -> None:
        seen: dict[Permutation, tuple] = {}
        inner = all_permutations(kappa - 2) if kappa > 2 else [Permutation(())]
        for family, m, l in double_coset_shapes(kappa):
            for v in inner:
                d = DoubleCosetDecomp(family, embed(v, kappa), m, l)
                w = d.reconstruct()
                key = (str(family), list(v), m, l)
                ok = w not in seen
                ok = ok and double_coset_decompose(w) == d
                ok = ok and length(w) == length(v) + len(d.tail())
                report.check(ok, key, "unique, recoverable, length-additive", list(w))
                seen.setdefault(w, key)
        total = len(all_permutations(kappa))
        report.check(len(seen) == total, {"kappa": kappa}, total, len(seen))

    return _timed("cosets", kappa, body)


def verify_prop31() -> VerificationReport:
    """The four two-strand products on both backends."""
    e, s = identity(2), simple(2, 1)
    table = {
        (e, e): basis(e),
        (e, s): basis(s),
        (s, e): basis(s),
        (s, s): HeckeElement(2, {e: ONE, s: HBAR}),
    }

    def body(report: VerificationReport) -> None:
        for (u, v), expected in table.items():
            alg = mul(basis(u), basis(v))
            geo = geometric_product(u, v).result
            for name, got in (("algebraic", alg), ("geometric", geo)):
                report.check(
                    got == expected, {"backend": name, "w1": list(u), "w2": list(v)},
                    _elem_json(expected), _elem_json(got),
                )

    return _timed("prop31", 2, body)


def geometric_left_mul(w1: Permutation, x: HeckeElement) -> HeckeElement:
    """T_{w1} * x, extended linearly from curve-count products."""
    acc = HeckeElement.zero(x.kappa)
    for w, c in x.items():
        acc = acc + geometric_product(w1, w).result.scale(c)
    return acc


def geometric_fold_product(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """
    a * b with every left factor expanded into generators, each of which is
    applied through the curve-count backend.
    """
    acc = HeckeElement.zero(a.kappa)
    for u, c in a.items():
        y = b
        for i in reversed(reduced_word(u).letters):
            y = geometric_left_mul(simple(a.kappa, i), y)
        acc = acc + y.scale(c)
    return acc


def verify_isomorphism(kappa: int, seed: int = 0, samples: int = 200) -> VerificationReport:
    """
    Curve-count products equal algebraic products for every supported left
    factor against all of S_kappa; then ``samples`` random pairs with an
    unsupported left factor are rebuilt by generator folding and compared.
    """
    if not 1 <= kappa <= 6:
        raise ValueError("isomorphism sweep is defined for 1 <= kappa <= 6")

    def body(report: VerificationReport) -> None:
        group = _by_length(all_permutations(kappa))
        for w1 in _by_length(supported_left_factors(kappa)):
            for w2 in group:
                geo = geometric_product(w1, w2).result
                alg = mul(basis(w1), basis(w2))
                report.check(
                    geo == alg, {"kappa": kappa, "w1": list(w1), "w2": list(w2)},
                    _elem_json(alg), _elem_json(geo),
                )
        others = [w for w in group if not is_simple_involution_product(w)]
        if not others:
            return
        rng = random.Random(seed)
        for _ in range(samples):
            w1, w2 = rng.choice(others), rng.choice(group)
            geo = geometric_fold_product(basis(w1), basis(w2))
            alg = mul(basis(w1), basis(w2))
            report.check(
                geo == alg, {"kappa": kappa, "w1": list(w1), "w2": list(w2), "folded": True},
                _elem_json(alg), _elem_json(geo),
            )

    return _timed("isomorphism", kappa, body)


def _relation_cases(kappa: int):
    one = HeckeElement.one(kappa)
    for i in range(1, kappa):
        yield "quadratic", (i,), (i, i), one + HeckeElement(kappa, {simple(kappa, i): HBAR})
    for i in range(1, kappa):
        for j in range(1, kappa):
            if abs(i - j) > 1:
                yield "commute", (i, j), (i, j), (j, i)
    for i in range(1, kappa - 1):
        yield "braid", (i,), (i, i + 1, i), (i + 1, i, i + 1)


def _fold(letters: tuple[int, ...], kappa: int, left: Callable[[int, HeckeElement], HeckeElement]) -> HeckeElement:
    y = HeckeElement.one(kappa)
    for i in reversed(letters):
        y = left(i, y)
    return y


def verify_relations(kappa: int) -> VerificationReport:
    """Quadratic, far-commutation and braid relations on both backends."""
    if not 2 <= kappa <= 7:
        raise ValueError("relations are checked for 2 <= kappa <= 7")

    backends = {
        "algebraic": lambda i, y: left_mul_gen(i, y),
        "algebraic-mul": lambda i, y: mul(algebra.generator(kappa, i), y),
        "geometric": lambda i, y: geometric_left_mul(simple(kappa, i), y),
    }

    def body(report: VerificationReport) -> None:
        for name, left in backends.items():
            for rel, idx, lhs_word, rhs in _relation_cases(kappa):
                lhs = _fold(lhs_word, kappa, left)
                rhs_val = rhs if isinstance(rhs, HeckeElement) else _fold(rhs, kappa, left)
                report.check(
                    lhs == rhs_val, {"backend": name, "relation": rel, "indices": list(idx)},
                    _elem_json(rhs_val), _elem_json(lhs),
                )

    return _timed("relations", kappa, body)


SUITES = ("cosets", "prop31", "relations", "isomorphism")


def run_suites(kappa: int, suite: str = "all", seed: int = 0) -> list[VerificationReport]:
    """Run one suite or all of them; suites outside their kappa range are skipped under "all"."""
    names = SUITES if suite == "all" else (suite,)
    reports = []
    for name in names:
        if name == "prop31":
            reports.append(verify_prop31())
        elif name == "cosets":
            if suite == "all" and not 2 <= kappa <= 7:
                continue
            reports.append(verify_coset_cover(kappa))
        elif name == "relations":
            if suite == "all" and not 2 <= kappa <= 7:
                continue
            reports.append(verify_relations(kappa))
        elif name == "isomorphism":
            if suite == "all" and not 1 <= kappa <= 6:
                continue
            reports.append(verify_isomorphism(kappa, seed=seed))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return reports
