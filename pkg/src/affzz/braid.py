"""Braid words for the extended affine braid group of type A and its Artin action.

The group is generated by ``s1 .. sn`` and the rotation ``r`` subject to

* far commutation ``s_i s_j = s_j s_i`` for cyclically distant ``i, j``,
* the braid relation ``s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`` (indices mod n),
* rotation ``r s_i r^-1 = s_{i+1}``.

Words are written left to right and act right to left: the rightmost letter is
applied first.  The Artin action realises the group inside Aut(F_{n+1}) with
F_{n+1} = <x0, ..., xn>; ``x0`` is the loop around the fixed puncture.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class BraidParseError(ValueError):
    """Raised for malformed tokens; carries the offending token position."""

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} (token {position}: {token!r})")
        self.position = position
        self.token = token


@dataclass(frozen=True, order=True)
class Letter:
    kind: str  # "s" or "r"
    index: int  # 1..n for "s", 0 for "r"
    exp: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.exp)

    def __str__(self) -> str:
        base = "r" if self.kind == "r" else f"s{self.index}"
        return base if self.exp == 1 else base + "^-1"


def sigma(i: int, exp: int = 1) -> Letter:
    return Letter("s", i, exp)


def rho(exp: int = 1) -> Letter:
    return Letter("r", 0, exp)


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("n must be at least 3")
        object.__setattr__(self, "letters", tuple(self.letters))
        for L in self.letters:
            if L.kind == "s" and not 1 <= L.index <= self.n:
                raise ValueError(f"generator index {L.index} outside 1..{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("cannot concatenate words for different n")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(L.inverse() for L in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(L) for L in self.letters)


_TOKEN = re.compile(r"^(?:s(\d+)|r)(\^(-?1))?$")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace separated tokens ``s<i>``, ``s<i>^-1``, ``r``, ``r^-1``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    letters = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN.match(tok)
        if not m:
            raise BraidParseError("malformed token", pos, tok)
        exp = int(m.group(3)) if m.group(3) else 1
        if m.group(1) is None:
            letters.append(rho(exp))
        else:
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise BraidParseError(f"generator index outside 1..{n}", pos, tok)
            letters.append(sigma(i, exp))
    return BraidWord(n, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for L in w.letters:
        if stack and stack[-1] == L.inverse():
            stack.pop()
        else:
            stack.append(L)
    return BraidWord(w.n, tuple(stack))


def generators(n: int) -> list[Letter]:
    """All 2n+2 letters, in a fixed order."""
    out = []
    for i in range(1, n + 1):
        out += [sigma(i), sigma(i, -1)]
    return out + [rho(), rho(-1)]


def random_word(n: int, length: int, rng: random.Random, reduced: bool = True) -> BraidWord:
    """Seeded random word of exactly ``length`` letters (freely reduced if asked)."""
    gens = generators(n)
    letters: list[Letter] = []
    while len(letters) < length:
        L = rng.choice(gens)
        if reduced and letters and letters[-1] == L.inverse():
            continue
        letters.append(L)
    return BraidWord(n, tuple(letters))


def random_words(n: int, count: int, maxlen: int, seed: int) -> list[BraidWord]:
    rng = random.Random(f"{seed}:{n}")
    return [random_word(n, rng.randint(0, maxlen), rng) for _ in range(count)]


def all_words(n: int, maxlen: int) -> Iterator[BraidWord]:
    """Every word of length <= maxlen over the full generator set."""
    gens = generators(n)
    frontier: list[tuple[Letter, ...]] = [()]
    yield BraidWord(n, ())
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            for g in gens:
                word = w + (g,)
                nxt.append(word)
                yield BraidWord(n, word)
        frontier = nxt


def relators(n: int) -> list[tuple[BraidWord, BraidWord]]:
    """Pairs (lhs, rhs) for every defining relation, with rotation relations
    also stated for s_n so that the derived generator is covered."""
    pairs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = (j - i) % n
            if i < j and d not in (1, n - 1):
                pairs.append((BraidWord(n, (sigma(i), sigma(j))), BraidWord(n, (sigma(j), sigma(i)))))
        k = i % n + 1
        pairs.append((BraidWord(n, (sigma(i), sigma(k), sigma(i))), BraidWord(n, (sigma(k), sigma(i), sigma(k)))))
        pairs.append((BraidWord(n, (rho(), sigma(i), rho(-1))), BraidWord(n, (sigma(k),))))
    return pairs


# ---------------------------------------------------------------------------
# free group and the Artin action

FreeLetter = tuple[int, int]  # (generator index 0..n, exponent +-1)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in x0..xn, stored in written order."""

    letters: tuple[FreeLetter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)


def _reduce(letters: Iterable[FreeLetter]) -> tuple[FreeLetter, ...]:
    stack: list[FreeLetter] = []
    for g, e in letters:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def x(i: int, e: int = 1) -> FreeWord:
    return FreeWord(((i, e),))


def parse_free(text: str) -> FreeWord:
    out = []
    for pos, tok in enumerate(text.split()):
        m = re.match(r"^x(\d+)(\^(-?1))?$", tok)
        if not m:
            raise BraidParseError("malformed free-group token", pos, tok)
        out.append((int(m.group(1)), int(m.group(3)) if m.group(3) else 1))
    return FreeWord(tuple(out))


def _run(a: int, b: int, e: int = 1) -> tuple[FreeLetter, ...]:
    """x_a x_{a+1} ... x_b (or descending when a > b), every exponent e."""
    step = 1 if b >= a else -1
    return tuple((j, e) for j in range(a, b + step, step))


@lru_cache(maxsize=None)
def _images(n: int, letter: Letter) -> tuple[FreeWord, ...]:
    """Images of x0..xn under the automorphism of one letter."""
    ident = [x(j) for j in range(n + 1)]
    if letter.kind == "s" and letter.index < n:
        i = letter.index
        img = list(ident)
        if letter.exp == 1:
            img[i] = x(i + 1)
            img[i + 1] = x(i + 1, -1) * x(i) * x(i + 1)
        else:
            img[i] = x(i) * x(i + 1) * x(i, -1)
            img[i + 1] = x(i)
        return tuple(img)
    if letter.kind == "r" and letter.exp == 1:
        img = [x(j + 1) for j in range(n)] + [None]
        img[0] = x(1, -1) * x(0) * x(1)
        img[n] = FreeWord(_run(n, 0, -1) + ((1, 1),) + _run(0, n))
        return tuple(img)
    if letter.kind == "r":
        img = [None, None] + [x(j - 1) for j in range(2, n + 1)]
        img[0] = FreeWord(_run(0, n) + _run(n - 1, 1, -1) + _run(0, n - 1) + _run(n, 0, -1))
        img[1] = FreeWord(_run(0, n) + _run(n - 1, 0, -1))
        return tuple(img)
    if letter.exp == 1:  # sigma_n, explicit formulas
        img = list(ident)
        img[0] = FreeWord(((1, -1),) + _run(0, n) + _run(n - 1, 1, -1) + _run(0, n - 1) + _run(n, 0, -1) + ((1, 1),))
        img[1] = FreeWord(((1, -1),) + _run(0, n) + _run(n - 1, 0, -1) + ((1, 1),))
        img[n] = FreeWord(_run(n, 0, -1) + ((1, 1),) + _run(0, n))
        return tuple(img)
    # sigma_n^{-1} = rho sigma_{n-1}^{-1} rho^{-1}
    conj = BraidWord(n, (rho(), sigma(n - 1, -1), rho(-1)))
    return tuple(artin_apply(conj, x(j)) for j in range(n + 1))


def _substitute(images: tuple[FreeWord, ...], w: FreeWord) -> FreeWord:
    out: list[FreeLetter] = []
    for g, e in w.letters:
        img = images[g] if e == 1 else images[g].inverse()
        out.extend(img.letters)
    return FreeWord(tuple(out))


def artin_apply(w: BraidWord, xw: FreeWord) -> FreeWord:
    """Apply the Artin automorphism of ``w`` to ``xw`` (rightmost letter first)."""
    for g, _ in xw.letters:
        if not 0 <= g <= w.n:
            raise ValueError(f"free generator x{g} outside x0..x{w.n}")
    result = xw
    for letter in reversed(w.letters):
        result = _substitute(_images(w.n, letter), result)
    return result


def phi_G(xw: FreeWord) -> tuple[int, int]:
    """(exponent sum over x1..xn, exponent sum over x0)."""
    a = sum(e for g, e in xw.letters if g != 0)
    b = sum(e for g, e in xw.letters if g == 0)
    return a, b
