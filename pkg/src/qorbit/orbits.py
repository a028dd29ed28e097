"""Ambiguous numbers of Q*(sqrt n), their graph under x and y, and the G-orbits it splits into.

An orbit is infinite, but its ambiguous elements form a single closed path,
so every orbit here is represented by that finite set alone.
"""
from __future__ import annotations

import csv
import io
import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import __version__, arith
from .errors import AmbiguityBranchError, DomainError, NonClosureError
from .group import GWord, Letter, apply_letter, reduce_to_ambiguous
from .quadirr import QuadIrr
from .residues import label_key, subset_label


def _check_n(n: int) -> None:
    if n <= 0 or arith.is_square(n):
        raise DomainError(f"n must be a positive non-square, got {n}")


@dataclass(frozen=True)
class AmbiguousSet:
    n: int
    elements: tuple[QuadIrr, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, alpha) -> bool:
        return alpha in self._members

    @property
    def _members(self) -> frozenset[QuadIrr]:
        return _member_set(self)


@lru_cache(maxsize=64)
def _member_set(s: AmbiguousSet) -> frozenset[QuadIrr]:
    return frozenset(s.elements)


@lru_cache(maxsize=256)
def enumerate_ambiguous(n: int) -> AmbiguousSet:
    """Every (a, b, c) with a^2 < n, c | a^2 - n (either sign) and gcd(a, b, c) = 1.

    Ordered by (a, c).
    """
    _check_n(n)
    r = math.isqrt(n)
    out = []
    for a in range(-r, r + 1):
        t = a * a - n
        for d in arith.divisors(t):
            for c in (-d, d):
                b = t // c
                if math.gcd(a, b, c) == 1:
                    out.append(QuadIrr(a, b, c, n))
    out.sort(key=lambda e: (e.a, e.c))
    return AmbiguousSet(n, tuple(out))


class AmbiguousGraph:
    """x-edges pair each ambiguous number with x of it; y-edges join it to y or y^2 images that are ambiguous."""

    def __init__(self, n: int):
        self.n = n
        self.nodes = enumerate_ambiguous(n)
        members = set(self.nodes.elements)
        self.x_edges: list[tuple[QuadIrr, QuadIrr]] = []
        self.y_edges: list[tuple[QuadIrr, QuadIrr]] = []
        self.adjacency: dict[QuadIrr, list[QuadIrr]] = {}
        for alpha in self.nodes:
            xa = apply_letter(Letter.X, alpha)
            ya = apply_letter(Letter.Y, alpha)
            yya = apply_letter(Letter.YY, alpha)
            nbrs = [xa]
            if _key(xa) > _key(alpha):
                self.x_edges.append((alpha, xa))
            for img in (ya, yya):
                if img in members:
                    nbrs.append(img)
            if ya in members:
                self.y_edges.append((alpha, ya))
            self.adjacency[alpha] = nbrs

    def components(self) -> list[list[QuadIrr]]:
        seen: set[QuadIrr] = set()
        comps = []
        for start in self.nodes:
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if v not in seen:
                        seen.add(v)
                        comp.append(v)
                        queue.append(v)
            comps.append(comp)
        return comps


def _key(alpha: QuadIrr) -> tuple[int, int, int]:
    return alpha.triple


def rep_key(alpha: QuadIrr) -> tuple:
    """Display preference: small |a|, then small |c|, then positive c, then a >= 0."""
    return (abs(alpha.a), abs(alpha.c), alpha.c < 0, alpha.a < 0, alpha.triple)


@dataclass(frozen=True)
class Orbit:
    component: frozenset[QuadIrr] = field(repr=False)
    rep: QuadIrr
    ambiguous_length: int
    fixing_word: GWord
    label: dict = field(hash=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "rep": self.rep.to_dict(with_n=False),
            "length": self.ambiguous_length,
            "word": str(self.fixing_word),
            "label": {str(k): v for k, v in self.label.items()},
        }


def fixing_word(start: QuadIrr, limit: int | None = None) -> GWord:
    """Walk the closed path from an ambiguous start, one yx or y^2x step at a time.

    The first step is the rightmost letter of the result.
    """
    if not start.is_ambiguous():
        raise DomainError(f"{start} is not ambiguous")
    if limit is None:
        limit = len(enumerate_ambiguous(start.n))
    steps: list[Letter] = []
    cur = start
    while True:
        a = apply_letter(Letter.YX, cur)
        b = apply_letter(Letter.YYX, cur)
        if a.is_ambiguous() == b.is_ambiguous():
            raise AmbiguityBranchError(
                f"at {cur}: yx -> {a}, y2x -> {b}; expected exactly one ambiguous image"
            )
        if a.is_ambiguous():
            steps.append(Letter.YX)
            cur = a
        else:
            steps.append(Letter.YYX)
            cur = b
        if cur == start:
            break
        if len(steps) > limit:
            raise NonClosureError(f"no return to {start} within {limit} steps")
    return GWord(reversed(steps))


@dataclass(frozen=True)
class Decomposition:
    n: int
    ambiguous: AmbiguousSet
    orbits: tuple[Orbit, ...]
    index: dict = field(repr=False, hash=False, compare=False)

    @property
    def tau(self) -> int:
        return len(self.ambiguous)


@lru_cache(maxsize=256)
def decompose(n: int) -> Decomposition:
    _check_n(n)
    graph = AmbiguousGraph(n)
    orbits = []
    for comp in graph.components():
        rep = min(comp, key=rep_key)
        orbits.append(
            Orbit(
                component=frozenset(comp),
                rep=rep,
                ambiguous_length=len(comp),
                fixing_word=fixing_word(rep, limit=len(graph.nodes)),
                label=subset_label(rep),
            )
        )
    orbits.sort(key=lambda o: (-o.ambiguous_length, rep_key(o.rep)))
    index = {alpha: i for i, o in enumerate(orbits) for alpha in o.component}
    return Decomposition(n, graph.nodes, tuple(orbits), index)


def orbit_decomposition(n: int) -> list[Orbit]:
    return list(decompose(n).orbits)


def orbit_index(alpha: QuadIrr) -> int:
    """Position of alpha's orbit in orbit_decomposition(alpha.n)."""
    beta, _ = reduce_to_ambiguous(alpha)
    return decompose(alpha.n).index[beta]


def orbit_of(alpha: QuadIrr) -> Orbit:
    return decompose(alpha.n).orbits[orbit_index(alpha)]


def realized_labels(n: int) -> set[tuple]:
    return {label_key(subset_label(alpha)) for alpha in enumerate_ambiguous(n)}


# ---- output formats ----

def format_label(label: dict) -> str:
    if not label:
        return "-"
    return ",".join(f"{k}:{'?' if v is None else f'{v:+d}'}" for k, v in label.items())


def orbits_document(n: int) -> dict:
    d = decompose(n)
    return {"n": n, "tau": d.tau, "orbits": [o.to_dict() for o in d.orbits]}


def orbits_json(n: int) -> str:
    return json.dumps(orbits_document(n), ensure_ascii=False) + "\n"


def orbits_from_json(text: str) -> str:
    """Recompute the orbit JSON from the reps stored in an existing document."""
    doc = json.loads(text)
    n = doc["n"]
    for o in doc["orbits"]:
        rep = QuadIrr.from_dict({**o["rep"], "n": n})
        if orbit_of(rep).rep != rep:
            raise DomainError(f"{rep} is not a canonical orbit representative")
    return orbits_json(n)


CSV_FIELDS = ["a", "b", "c", "length", "word", "label"]


def _rows(n: int) -> list[list[str]]:
    return [
        [str(o.rep.a), str(o.rep.b), str(o.rep.c), str(o.ambiguous_length), str(o.fixing_word), format_label(o.label)]
        for o in decompose(n).orbits
    ]


def orbits_csv(n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    w.writerows(_rows(n))
    return buf.getvalue()


def orbits_table(n: int) -> str:
    d = decompose(n)
    rows = [["rep", "length", "word", "label"]]
    for o in d.orbits:
        rows.append([str(o.rep), str(o.ambiguous_length), str(o.fixing_word), format_label(o.label)])
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = [f"n = {n}, tau = {d.tau}, orbits = {len(d.orbits)}"]
    for r in rows:
        lines.append("  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def to_dot(n: int) -> str:
    """Graphviz digraph: x-edges point from the negative to the positive end, y-edges are dashed."""
    graph = AmbiguousGraph(n)
    d = decompose(n)

    def node(alpha):
        return f'"{alpha.a},{alpha.b},{alpha.c}"'

    lines = [
        f"// qorbit {__version__}: ambiguous graph of Q*(sqrt {n})",
        f"// n={n} tau={d.tau} orbits={len(d.orbits)}",
        f"digraph Q{n} {{",
        "  node [shape=circle, fontsize=9];",
    ]
    for i, o in enumerate(d.orbits):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="{o.rep} len={o.ambiguous_length}";')
        for alpha in sorted(o.component, key=lambda e: (e.a, e.c)):
            lines.append(f"    {node(alpha)};")
        lines.append("  }")
    for u, v in graph.x_edges:
        neg, pos = (u, v) if u.sign() < 0 else (v, u)
        lines.append(f"  {node(neg)} -> {node(pos)} [color=black];")
    for u, v in graph.y_edges:
        lines.append(f"  {node(u)} -> {node(v)} [style=dashed, color=blue, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
