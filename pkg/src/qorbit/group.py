"""The modular group G = <x, y | x^2 = y^3 = 1> acting on Q*(sqrt n).

Words are read like function composition: the rightmost letter acts first.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, NonTerminationError
from .quadirr import QuadIrr


class Letter(enum.Enum):
    X = "x"
    Y = "y"
    YY = "y2"
    YX = "yx"
    YYX = "y2x"


def _x(a, b, c):
    return -a, c, b


def _y(a, b, c):
    return b - a, b + c - 2 * a, b


def _yy(a, b, c):
    return _y(*_y(a, b, c))


def _yx(a, b, c):
    return a + c, 2 * a + b + c, c


def _yyx(a, b, c):
    return a + b, b, 2 * a + b + c


TRIPLE_MAPS = {
    Letter.X: _x,
    Letter.Y: _y,
    Letter.YY: _yy,
    Letter.YX: _yx,
    Letter.YYX: _yyx,
}


def apply_letter(g: Letter, alpha: QuadIrr) -> QuadIrr:
    return QuadIrr(*TRIPLE_MAPS[g](alpha.a, alpha.b, alpha.c), alpha.n)


_TOKEN = re.compile(r"\(yx\)|\(y2x\)|y2|x|y|\^(\d+)")
_TOKEN_LETTER = {"(yx)": Letter.YX, "(y2x)": Letter.YYX, "y2": Letter.YY, "x": Letter.X, "y": Letter.Y}


@dataclass(frozen=True)
class GWord:
    """A finite sequence of letters, leftmost first as written."""

    letters: tuple[Letter, ...] = ()

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", tuple(letters))

    @classmethod
    def parse(cls, text: str) -> GWord:
        """Parse '(yx)^3(y2x)(yx)^3'-style text. '1' and '' denote the identity."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        letters: list[Letter] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.group(1) is not None:
                raise DomainError(f"cannot parse word {text!r} at offset {pos}")
            letter = _TOKEN_LETTER[m.group(0)]
            pos = m.end()
            exp = 1
            p = _TOKEN.match(text, pos)
            if p and p.group(1) is not None:
                exp = int(p.group(1))
                if exp < 1 or letter not in (Letter.YX, Letter.YYX):
                    raise DomainError(f"bad exponent in {text!r} at offset {pos}")
                pos = p.end()
            letters.extend([letter] * exp)
        return cls(letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        out = []
        i = 0
        ls = self.letters
        while i < len(ls):
            j = i
            if ls[i] in (Letter.YX, Letter.YYX):
                while j < len(ls) and ls[j] == ls[i]:
                    j += 1
                out.append(f"({ls[i].value})^{j - i}")
                i = j
            else:
                out.append(ls[i].value)
                i += 1
        return "".join(out)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GWord) -> GWord:
        return GWord(self.letters + other.letters)

    def __pow__(self, k: int) -> GWord:
        return GWord(self.letters * k)

    def runs(self) -> list[tuple[Letter, int]]:
        out: list[tuple[Letter, int]] = []
        for g in self.letters:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + 1)
            else:
                out.append((g, 1))
        return out

    def reversed(self) -> GWord:
        return GWord(self.letters[::-1])

    def reduced(self) -> GWord:
        """Free-product normal form: cancel x^2 and y^3, then regroup y x and y^2 x."""
        stack: list[tuple[str, int]] = []
        for g in self.letters:
            for prim in _PRIMITIVES[g]:
                if stack and stack[-1][0] == prim[0]:
                    kind, e = stack.pop()
                    e = (e + prim[1]) % (2 if kind == "x" else 3)
                    if e:
                        stack.append((kind, e))
                else:
                    stack.append(prim)
        letters: list[Letter] = []
        i = 0
        while i < len(stack):
            kind, e = stack[i]
            if kind == "y" and i + 1 < len(stack):
                letters.append(Letter.YX if e == 1 else Letter.YYX)
                i += 2
            elif kind == "y":
                letters.append(Letter.Y if e == 1 else Letter.YY)
                i += 1
            else:
                letters.append(Letter.X)
                i += 1
        return GWord(letters)


_PRIMITIVES = {
    Letter.X: (("x", 1),),
    Letter.Y: (("y", 1),),
    Letter.YY: (("y", 2),),
    Letter.YX: (("y", 1), ("x", 1)),
    Letter.YYX: (("y", 2), ("x", 1)),
}


def word(text_or_letters) -> GWord:
    if isinstance(text_or_letters, str):
        return GWord.parse(text_or_letters)
    return GWord(text_or_letters)


def apply_word(w: GWord, alpha: QuadIrr) -> QuadIrr:
    a, b, c = alpha.a, alpha.b, alpha.c
    for g in reversed(w.letters):
        a, b, c = TRIPLE_MAPS[g](a, b, c)
    return QuadIrr(a, b, c, alpha.n)


@dataclass(frozen=True)
class GMatrix:
    """Element [[p, q], [r, s]] of PSL(2, Z); sign fixed so that r > 0, or r == 0 and s > 0."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p * self.s - self.q * self.r != 1:
            raise DomainError(f"determinant of {self.rows} is not 1")
        if self.r < 0 or (self.r == 0 and self.s < 0):
            for f in ("p", "q", "r", "s"):
                object.__setattr__(self, f, -getattr(self, f))

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.p, self.q), (self.r, self.s))

    @property
    def trace(self) -> int:
        return self.p + self.s

    def __matmul__(self, other: GMatrix) -> GMatrix:
        return GMatrix(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def act(self, alpha: QuadIrr) -> QuadIrr:
        """Moebius action z -> (p z + q) / (r z + s), computed on the triple."""
        p, q, r, s = self.p, self.q, self.r, self.s
        a, b, c = alpha.a, alpha.b, alpha.c
        return QuadIrr(
            p * r * b + (p * s + q * r) * a + q * s * c,
            p * p * b + 2 * p * q * a + q * q * c,
            r * r * b + 2 * r * s * a + s * s * c,
            alpha.n,
        )


IDENTITY = GMatrix(1, 0, 0, 1)

LETTER_MATRIX = {
    Letter.X: GMatrix(0, -1, 1, 0),
    Letter.Y: GMatrix(1, -1, 1, 0),
    Letter.YY: GMatrix(0, -1, 1, -1),
    Letter.YX: GMatrix(1, 1, 0, 1),
    Letter.YYX: GMatrix(1, 0, 1, 1),
}


def matrix_of(w: GWord) -> GMatrix:
    m = IDENTITY
    for g in w.letters:
        m = m @ LETTER_MATRIX[g]
    return m


def _t_power(k: int) -> list[Letter]:
    # T = yx; T^-1 = x y^2
    if k >= 0:
        return [Letter.YX] * k
    return [Letter.X, Letter.YY] * (-k)


def word_of(m: GMatrix | Sequence[Sequence[int]]) -> GWord:
    """Write a determinant-one matrix as a reduced word in x and y.

    Euclid on the first column: M = T^k S M' with S = x, until the
    lower-left entry vanishes and what is left is a power of T.
    """
    if not isinstance(m, GMatrix):
        (p, q), (r, s) = m
        m = GMatrix(p, q, r, s)
    p, q, r, s = m.p, m.q, m.r, m.s
    letters: list[Letter] = []
    while r != 0:
        k = p // r
        letters += _t_power(k)
        letters.append(Letter.X)
        # M' = S^-1 T^-k M
        p, q, r, s = r, s, -(p - k * r), -(q - k * s)
    # p = s = +-1 here
    letters += _t_power(q * p)
    return GWord(letters).reduced()


@dataclass(frozen=True)
class Reduction:
    start: QuadIrr
    result: QuadIrr
    word: GWord
    matrix: GMatrix
    # (element before the step, partial quotient) per continued-fraction step
    steps: tuple[tuple[QuadIrr, int], ...]


def _is_reduced(alpha: QuadIrr) -> bool:
    return alpha.floor() >= 1 and alpha.conjugate().floor() == -1


def cf_step(alpha: QuadIrr) -> tuple[QuadIrr, int]:
    """alpha -> 1 / (alpha - floor(alpha)), on triples."""
    m = alpha.floor()
    a, b, c = alpha.a, alpha.b, alpha.c
    A = a - m * c
    B = b - 2 * a * m + m * m * c
    return QuadIrr(-A, -c, -B, alpha.n), m


def reduce_with_trace(alpha: QuadIrr, max_steps: int = 10**6) -> Reduction:
    if alpha.is_ambiguous():
        return Reduction(alpha, alpha, GWord(), IDENTITY, ())
    steps = []
    cur = alpha
    pending = None  # partial quotient of an unpaired step
    total = IDENTITY
    while True:
        if len(steps) >= max_steps:
            raise NonTerminationError(f"no reduced surd after {max_steps} steps from {alpha}")
        nxt, m = cf_step(cur)
        steps.append((cur, m))
        if pending is None:
            pending = m
        else:
            # z -> 1/(z - m2) after z -> 1/(z - m1): [[0,1],[1,-m2]] [[0,1],[1,-m1]]
            total = GMatrix(1, -pending, -m, 1 + m * pending) @ total
            pending = None
        cur = nxt
        if pending is None and _is_reduced(cur):
            break
    w = word_of(total)
    return Reduction(alpha, cur, w, total, tuple(steps))


def reduce_to_ambiguous(alpha: QuadIrr, max_steps: int = 10**6) -> tuple[QuadIrr, GWord]:
    red = reduce_with_trace(alpha, max_steps)
    return red.result, red.word
