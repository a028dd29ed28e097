"""Residue classes [a,b,c] (mod s) and the quadratic-residue labels of G-subsets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import arith
from .errors import DomainError
from .quadirr import QuadIrr


@dataclass(frozen=True, order=True)
class ResidueClass:
    s: int
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def class_of(alpha: QuadIrr, s: int) -> ResidueClass:
    return ResidueClass(s, alpha.a % s, alpha.b % s, alpha.c % s)


def enumerate_classes(n: int, s: int) -> list[ResidueClass]:
    """All classes [a,b,c] mod s with a^2 - n = bc (mod s), primitive at every prime dividing s."""
    if s < 2:
        raise DomainError(f"modulus must be >= 2, got {s}")
    qs = arith.prime_factors(s)
    out = []
    for a, b, c in itertools.product(range(s), repeat=3):
        if (a * a - n - b * c) % s:
            continue
        if any(a % q == 0 and b % q == 0 and c % q == 0 for q in qs):
            continue
        out.append(ResidueClass(s, a, b, c))
    return out


@dataclass(frozen=True)
class ACPartition:
    A1: frozenset[ResidueClass]
    A2: frozenset[ResidueClass]
    C1: frozenset[ResidueClass]
    C2: frozenset[ResidueClass]

    def as_dict(self) -> dict[str, frozenset[ResidueClass]]:
        return {"A1": self.A1, "A2": self.A2, "C1": self.C1, "C2": self.C2}

    def part_of(self, cls: ResidueClass) -> str:
        for name, part in self.as_dict().items():
            if cls in part:
                return name
        raise KeyError(cls)


def partition_ACsets(n: int, p: int) -> ACPartition:
    """Split the classes mod p into A1, A2 (by (c/p)) and C1, C2 (p | c, by (b/p))."""
    if p == 2 or not arith.is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    if n % p:
        raise DomainError(f"{p} does not divide n={n}")
    parts: dict[str, set[ResidueClass]] = {"A1": set(), "A2": set(), "C1": set(), "C2": set()}
    for cls in enumerate_classes(n, p):
        if cls.c:
            parts["A1" if arith.legendre(cls.c, p) == 1 else "A2"].add(cls)
        else:
            parts["C1" if arith.legendre(cls.b, p) == 1 else "C2"].add(cls)
    return ACPartition(*(frozenset(parts[k]) for k in ("A1", "A2", "C1", "C2")))


def power_of_two_exponent(n: int) -> int | None:
    """h if n == 2**h, else None."""
    if n < 1 or n & (n - 1):
        return None
    return n.bit_length() - 1


def label_moduli(n: int) -> list[int]:
    """The moduli a label for n is taken over: odd primes dividing n, or 2**h itself."""
    odd = arith.odd_prime_factors(n)
    if odd:
        return odd
    h = power_of_two_exponent(n)
    if h is not None and h >= 3:
        return [n]
    return []


def prime_sign(alpha: QuadIrr, p: int) -> int:
    """(c/p) when p does not divide c, otherwise (b/p)."""
    if alpha.c % p:
        return arith.legendre(alpha.c, p)
    s = arith.legendre(alpha.b, p)
    if s == 0:
        raise DomainError(f"{p} divides both b and c of {alpha!r}")
    return s


def two_power_sign(alpha: QuadIrr, h: int) -> int | None:
    """Sign for n = 2**h from the odd member(s) of {b, c}; None if undefined."""
    odd = {v % 8 for v in (alpha.b, alpha.c) if v % 2}
    if len(odd) != 1:
        return None
    return 1 if arith.is_qr_mod_2h(odd.pop(), h) else -1


def subset_label(alpha: QuadIrr) -> dict[int, int | None]:
    """Ordered {modulus: sign}; empty when no labelling rule applies to n."""
    n = alpha.n
    odd = arith.odd_prime_factors(n)
    if odd:
        return {p: prime_sign(alpha, p) for p in odd}
    h = power_of_two_exponent(n)
    if h is not None and h >= 3:
        return {n: two_power_sign(alpha, h)}
    return {}


def label_key(label: dict[int, int | None]) -> tuple:
    return tuple(sorted(label.items()))


def predicted_subset_count(n: int) -> int:
    """2**r for r distinct odd primes dividing n; 2 for n = 2**h, h >= 3."""
    if n <= 0 or arith.is_square(n):
        raise DomainError(f"n must be a positive non-square, got {n}")
    odd = arith.odd_prime_factors(n)
    if not odd:
        h = power_of_two_exponent(n)
        if h is not None and h >= 3:
            return 2
    return 2 ** len(odd)
