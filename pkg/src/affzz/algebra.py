"""The trigraded zigzag algebra R_n of the cyclic quiver with n vertices.

Basis (4n elements): idempotents ``(i)``, arrows ``(i|i+1)`` and ``(i|i-1)``,
and one loop ``(i|i+1|i) = (i|i-1|i)`` per vertex.  Products are path
concatenation, ``x * y`` means "first x, then y", and every path of length
three or more vanishes, as do the two straight length-two paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

KINDS = ("e", "up", "down", "loop")


def wrap(i: int, n: int) -> int:
    """Cyclic representative in 1..n."""
    return (i - 1) % n + 1


@dataclass(frozen=True, order=True)
class Path:
    """One basis element.  ``kind`` is one of e/up/down/loop, ``i`` its source."""

    n: int
    kind: str
    i: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if not 1 <= self.i <= self.n:
            raise ValueError(f"vertex {self.i} outside 1..{self.n}")

    @property
    def source(self) -> int:
        return self.i

    @property
    def target(self) -> int:
        if self.kind == "up":
            return wrap(self.i + 1, self.n)
        if self.kind == "down":
            return wrap(self.i - 1, self.n)
        return self.i

    @property
    def length(self) -> int:
        return {"e": 0, "up": 1, "down": 1, "loop": 2}[self.kind]

    def __str__(self) -> str:
        if self.kind == "e":
            return f"({self.i})"
        if self.kind == "loop":
            return f"({self.i}|{wrap(self.i + 1, self.n)}|{self.i})"
        return f"({self.i}|{self.target})"


@dataclass(frozen=True)
class TriDegree:
    d1: int
    d2: int
    d3: int

    def __add__(self, other: "TriDegree") -> "TriDegree":
        return TriDegree(self.d1 + other.d1, (self.d2 + other.d2) % 2, self.d3 + other.d3)


def idem(n: int, i: int) -> Path:
    return Path(n, "e", wrap(i, n))


def up(n: int, i: int) -> Path:
    return Path(n, "up", wrap(i, n))


def down(n: int, i: int) -> Path:
    return Path(n, "down", wrap(i, n))


def loop(n: int, i: int) -> Path:
    return Path(n, "loop", wrap(i, n))


def arrow(n: int, i: int, j: int) -> Path:
    """The arrow (i|j); i and j must be cyclic neighbours."""
    i, j = wrap(i, n), wrap(j, n)
    if wrap(i + 1, n) == j:
        return up(n, i)
    if wrap(i - 1, n) == j:
        return down(n, i)
    raise ValueError(f"no arrow ({i}|{j}) for n={n}")


def basis(n: int) -> list[Path]:
    return [Path(n, k, i) for i in range(1, n + 1) for k in KINDS]


def tridegree(x: Path) -> TriDegree:
    n = x.n
    if x.kind == "e":
        return TriDegree(0, 0, 0)
    if x.kind == "loop":
        return TriDegree(1, 0, 0)
    if x.kind == "up":
        return TriDegree(1, 1, 1 if x.i == n else 0)
    return TriDegree(0, 1, -1 if x.i == 1 else 0)


def multiply(x: Path, y: Path) -> Path | None:
    """Product of two basis elements: a basis element or None (zero)."""
    if x.n != y.n:
        raise ValueError("cannot multiply elements for different n")
    if x.target != y.source:
        return None
    if x.kind == "e":
        return y
    if y.kind == "e":
        return x
    if x.kind == "up" and y.kind == "down":
        return loop(x.n, x.i)
    if x.kind == "down" and y.kind == "up":
        return loop(x.n, x.i)
    return None


def _paths(n: int, i: int, j: int) -> list[Path]:
    i, j = wrap(i, n), wrap(j, n)
    if i == j:
        return [idem(n, i), loop(n, i)]
    if wrap(i + 1, n) == j:
        return [up(n, i)]
    if wrap(i - 1, n) == j:
        return [down(n, i)]
    return []


def paths_between(n: int, i: int, j: int) -> list[tuple[Path, TriDegree]]:
    """Graded basis of e_i R_n e_j, i.e. paths starting at i and ending at j."""
    return [(x, tridegree(x)) for x in _paths(n, i, j)]


def rotate(x: Path, k: int = 1) -> Path:
    """Index-shift automorphism i -> i+k (preserves kind)."""
    return Path(x.n, x.kind, wrap(x.i + k, x.n))


class AlgebraElement:
    """Integer combination of basis paths; immutable."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[Path, int] | Iterable[tuple[Path, int]] = ()):
        acc: dict[Path, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for p, c in items:
            if p.n != n:
                raise ValueError("basis element for a different n")
            acc[p] = acc.get(p, 0) + c
        self.n = n
        self._terms = {p: c for p, c in sorted(acc.items()) if c != 0}

    @classmethod
    def of(cls, p: Path, c: int = 1) -> "AlgebraElement":
        return cls(p.n, {p: c})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    def items(self) -> Iterator[tuple[Path, int]]:
        return iter(self._terms.items())

    def coeff(self, p: Path) -> int:
        return self._terms.get(p, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.n, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, k: int) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: k * c for p, c in self._terms.items()})

    def __mul__(self, other: "AlgebraElement | int") -> "AlgebraElement":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = []
        for p, a in self._terms.items():
            for q, b in other._terms.items():
                r = multiply(p, q)
                if r is not None:
                    out.append((r, a * b))
        return AlgebraElement(self.n, out)

    __rmul__ = scale

    def rotate(self, k: int = 1) -> "AlgebraElement":
        return AlgebraElement(self.n, {rotate(p, k): c for p, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, AlgebraElement) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError("mismatched n")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}{p}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    __repr__ = __str__


@lru_cache(maxsize=None)
def multiplication_table(n: int) -> dict[tuple[Path, Path], Path]:
    """All nonzero basis products for fixed n."""
    B = basis(n)
    return {(a, b): r for a in B for b in B if (r := multiply(a, b)) is not None}


def parse_element(text: str, n: int) -> AlgebraElement:
    """Inverse of ``str`` for AlgebraElement: e.g. ``(1|2)-2*(3|4|3)``."""
    import re

    text = text.replace(" ", "")
    if text == "0":
        return AlgebraElement.zero(n)
    out = []
    for sign, mag, body in re.findall(r"([+-]?)(\d+\*)?\(([\d|]+)\)", text):
        c = int(mag[:-1]) if mag else 1
        c = -c if sign == "-" else c
        idx = [int(v) for v in body.split("|")]
        if len(idx) == 1:
            p = idem(n, idx[0])
        elif len(idx) == 2:
            p = arrow(n, idx[0], idx[1])
        else:
            p = loop(n, idx[0])
        out.append((p, c))
    return AlgebraElement(n, out)
