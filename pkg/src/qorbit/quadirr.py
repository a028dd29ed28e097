"""The element (a + sqrt(n)) / c of Q*(sqrt n), stored as the integer triple (a, b, c)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .errors import DomainError, MembershipError, PrimitivityError


@dataclass(frozen=True, slots=True)
class QuadIrr:
    """Exact element alpha(a, b, c) = (a + sqrt(n)) / c with b = (a^2 - n) / c.

    Build instances with :meth:`make`; the bare constructor does no checking
    and exists so the group action can produce images cheaply.
    """

    a: int
    b: int
    c: int
    n: int

    @classmethod
    def make(cls, a: int, c: int, n: int) -> QuadIrr:
        if n <= 0 or arith.is_square(n):
            raise DomainError(f"n must be a positive non-square, got {n}")
        if c == 0:
            raise DomainError("c must be nonzero")
        q, r = divmod(a * a - n, c)
        if r:
            raise MembershipError(f"{c} does not divide {a}^2 - {n} = {a * a - n}")
        if math.gcd(a, q, c) != 1:
            raise PrimitivityError(f"gcd({a}, {q}, {c}) = {math.gcd(a, q, c)} > 1")
        return cls(a, q, c, n)

    @classmethod
    def from_dict(cls, d: dict) -> QuadIrr:
        alpha = cls.make(d["a"], d["c"], d["n"])
        if "b" in d and d["b"] != alpha.b:
            raise MembershipError(f"inconsistent b={d['b']}, expected {alpha.b}")
        return alpha

    def check(self) -> None:
        """Raise if the triple invariants do not hold."""
        if self.c == 0 or self.b * self.c != self.a * self.a - self.n:
            raise MembershipError(f"{self!r} violates bc = a^2 - n")
        if math.gcd(self.a, self.b, self.c) != 1:
            raise PrimitivityError(f"{self!r} is not primitive")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def conjugate(self) -> QuadIrr:
        return QuadIrr(-self.a, -self.b, -self.c, self.n)

    def is_ambiguous(self) -> bool:
        return self.a * self.a < self.n

    def sign(self) -> int:
        # a + sqrt(n) > 0 iff a >= -isqrt(n), since n is not a square
        s = 1 if self.a >= -math.isqrt(self.n) else -1
        return s if self.c > 0 else -s

    def floor(self) -> int:
        top = self.a + math.isqrt(self.n)
        if self.c > 0:
            return top // self.c
        return -(top // -self.c) - 1

    def fixed_point_equation(self) -> tuple[int, int, int]:
        """Coefficients (A, B, C) of A z^2 + B z + C = 0, whose roots are alpha and its conjugate."""
        coeffs = (self.c, -2 * self.a, self.b)
        g = math.gcd(*coeffs)
        if self.c < 0:
            g = -g
        return tuple(x // g for x in coeffs)

    def squarefree_part(self) -> int:
        return arith.squarefree_decompose(self.n)[1]

    def to_dict(self, with_n: bool = True) -> dict:
        d = {"a": self.a, "b": self.b, "c": self.c}
        if with_n:
            d["n"] = self.n
        return d

    def __str__(self) -> str:
        return f"({self.a}+√{self.n})/{self.c}"


def make(a: int, c: int, n: int) -> QuadIrr:
    return QuadIrr.make(a, c, n)


def format_equation(coeffs: tuple[int, int, int], var: str = "z") -> str:
    """Render (A, B, C) as e.g. 'z^2-z-9=0'."""
    terms = []
    for coef, mono in zip(coeffs, (f"{var}^2", var, "")):
        if coef == 0:
            continue
        mag = abs(coef)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        sign = "-" if coef < 0 else "+"
        terms.append((sign, body))
    out = ""
    for i, (sign, body) in enumerate(terms):
        out += (("-" if sign == "-" else "") if i == 0 else sign) + body
    return out + "=0"
