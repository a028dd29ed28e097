"""Exact integer primitives.

Everything here works on Python ints, so there is no overflow to worry about.
Factorisation is trial division only; inputs are desk-scale.
"""
from __future__ import annotations

import math
from functools import reduce

from .errors import DomainError


def isqrt(n: int) -> int:
    """Largest s with s*s <= n."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def floor_div(a: int, b: int) -> int:
    """Division rounding toward minus infinity."""
    if b == 0:
        raise DomainError("division by zero")
    return a // b


def gcd3(a: int, b: int, c: int) -> int:
    if a == b == c == 0:
        raise DomainError("gcd3 of three zeros")
    return math.gcd(a, b, c)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of |n| by trial division, as {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def odd_prime_factors(n: int) -> list[int]:
    return [p for p in prime_factors(n) if p != 2]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def divisors(n: int) -> list[int]:
    """All positive divisors of |n|, increasing."""
    n = abs(n)
    if n == 0:
        raise DomainError("divisors of 0")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (k, m) with n == k*k*m and m squarefree."""
    if n < 1:
        raise DomainError(f"squarefree_decompose needs n >= 1, got {n}")
    k = m = 1
    for p, e in factorize(n).items():
        k *= p ** (e // 2)
        if e % 2:
            m *= p
    return k, m


def legendre(t: int, p: int) -> int:
    """Legendre symbol (t/p) in {-1, 0, 1}, by Euler's criterion.

    Negative t is reduced mod p first.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    t %= p
    if t == 0:
        return 0
    return 1 if pow(t, (p - 1) // 2, p) == 1 else -1


def is_qr_mod_2h(t: int, h: int) -> bool:
    """Whether odd t is a square modulo 2**h (h >= 3), i.e. t = 1 mod 8."""
    if h < 3:
        raise DomainError(f"need h >= 3, got {h}")
    if t % 2 == 0:
        raise DomainError(f"{t} is even")
    return t % 8 == 1


def product(values) -> int:
    return reduce(lambda x, y: x * y, values, 1)
