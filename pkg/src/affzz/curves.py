"""Admissible trigraded curves on the punctured disk, in combinatorial normal form.

Model.  Punctures 1..n sit around the fixed puncture 0.  The rays d_1..d_n
(from 0 to the boundary, d_j between punctures j and j+1) cut the disk into
sectors; sector j contains puncture j and is bounded by d_{j-1} and d_j.  An
extra slit from 0 to puncture j makes every sector simply connected, so a
curve is recorded by the letters it meets in order:

* ``("D", j, +1)``  crossing d_j from sector j into sector j+1,
* ``("C", j, +1)``  crossing the slit of sector j (inverse letters reversed).

Reduced words with no slit letters at either end are exactly the normal
forms; the D letters are the crossings.  Each crossing carries its local index
(mu1, mu2, mu3) relative to the trigraded barrier.

Half twists act through an automorphism of the loops around the punctures;
rotation relabels sectors.  Local indices are transported along the curve by
the per-segment rules below, anchored on crossings the twist leaves alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import AlgebraElement, arrow, loop
from .braid import BraidWord, Letter
from .complexes import ProjComplex, ShiftedProjective
from .laurent import Q3, LaurentPoly

GLetter = tuple[str, int, int]
Mu = tuple[int, int, int]


class CurveError(ValueError):
    """Malformed curve encoding or an unclassifiable string."""


@dataclass(frozen=True)
class Calibration:
    """Orientation conventions that the pictures leave implicit.

    ``sigma_variant``  which of the two mirror half twists realises s_k,
    ``inner_is_type1`` whether a pass-through between 0 and the puncture is
                       the segment type whose far index drops by (1, -1, 0),
    ``uturn_left`` / ``uturn_right``  sign linking the slit exponent of a
                       U-turn to the index jump between its two crossings.
    """

    sigma_variant: str = "A"
    inner_is_type1: bool = True
    uturn_left: int = 1
    uturn_right: int = 1


DEFAULT = Calibration()


def _wrap(j: int, n: int) -> int:
    return (j - 1) % n + 1


def _add(a: Mu, b: Mu) -> Mu:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _neg(a: Mu) -> Mu:
    return (-a[0], -a[1], -a[2])


def _sub(a: Mu, b: Mu) -> Mu:
    return _add(a, _neg(b))


# ---------------------------------------------------------------------------
# groupoid words


def inv_word(w: Sequence[GLetter]) -> tuple[GLetter, ...]:
    return tuple((k, j, -e) for k, j, e in reversed(w))


def reduce_word(w: Iterable[GLetter]) -> tuple[GLetter, ...]:
    st: list[GLetter] = []
    for L in w:
        if st and st[-1] == (L[0], L[1], -L[2]):
            st.pop()
        else:
            st.append(L)
    return tuple(st)


def relabel(w: Sequence[GLetter], s: int, n: int) -> tuple[GLetter, ...]:
    return tuple((k, _wrap(j + s, n), e) for k, j, e in w)


def _tail(j: int) -> tuple[GLetter, ...]:
    return tuple(("D", i, 1) for i in range(1, j))


def _loop(j: int) -> tuple[GLetter, ...]:
    return _tail(j) + (("C", j, 1),) + inv_word(_tail(j))


@lru_cache(maxsize=None)
def _half_twist(variant: str) -> tuple[dict[int, tuple[GLetter, ...]], dict[int, tuple[GLetter, ...]]]:
    """Slit images and endpoint corrections for the half twist swapping 1 and 2.

    Variant ``A``: z1 -> z2, z2 -> z2^-1 z1 z2.  Variant ``B`` is its inverse.
    Here z_j is the loop around puncture j based in sector 1.
    """
    z1, z2 = _loop(1), _loop(2)
    if variant == "A":
        h = {1: z2, 2: inv_word(z2) + z1 + z2}
        u = {1: (), 2: inv_word(z2)}
    elif variant == "B":
        h = {1: z1 + z2 + inv_word(z1), 2: z1}
        u = {1: z1, 2: ()}
    else:
        raise ValueError(f"unknown twist variant {variant!r}")
    perm = {1: 2, 2: 1}
    images = {j: reduce_word(inv_word(_tail(j)) + h[j] + _tail(j)) for j in (1, 2)}
    ends = {j: reduce_word(inv_word(_tail(j)) + u[j] + _tail(perm[j])) for j in (1, 2)}
    return images, ends


def _strip(w: tuple[GLetter, ...], a: int, b: int) -> tuple[GLetter, ...]:
    while w and w[0][0] == "C" and w[0][1] == a:
        w = w[1:]
    while w and w[-1][0] == "C" and w[-1][1] == b:
        w = w[:-1]
    return w


def twist_word(n: int, k: int, variant: str, a: int, b: int, w: Sequence[GLetter]) -> tuple[int, int, tuple[GLetter, ...]]:
    """Apply the half twist on b_k (given variant) to an arc a -> b with word w."""
    images, ends = _half_twist(variant)
    s = k - 1
    a1, b1 = _wrap(a - s, n), _wrap(b - s, n)
    out: list[GLetter] = []
    for L in relabel(w, -s, n):
        if L[0] == "C" and L[1] in (1, 2):
            img = images[L[1]]
            out.extend(img if L[2] == 1 else inv_word(img))
        else:
            out.append(L)
    perm = {1: 2, 2: 1}
    pa, pb = ends.get(a1, ()), ends.get(b1, ())
    w2 = reduce_word(inv_word(pa) + tuple(out) + pb)
    a2, b2 = perm.get(a1, a1), perm.get(b1, b1)
    w2 = _strip(w2, a2, b2)
    return _wrap(a2 + s, n), _wrap(b2 + s, n), relabel(w2, s, n)


# ---------------------------------------------------------------------------
# segments and index propagation


def sector_after(L: GLetter, n: int) -> int:
    _, j, e = L
    return _wrap(j + 1, n) if e == 1 else j


def pass_delta(n: int, sector: int, type1: bool) -> Mu:
    """mu(left crossing) - mu(right crossing) for a pass-through of ``sector``."""
    if type1:
        return (n - 1, 1 - n, -1) if sector == 1 else (-1, 1, 0)
    return (n + 1, -n, -1) if sector == 1 else (1, 0, 0)


@dataclass(frozen=True)
class Segment:
    """An essential segment between crossings ``i`` and ``i+1`` (crossing indices)."""

    sector: int
    kind: str  # "1", "1'", "2" (U-turn on the d_{s-1} side), "2'" (U-turn on the d_s side)
    slit: int  # net slit exponent
    forward: bool  # for pass-throughs: travelling from the d_{s-1} side to the d_s side


def segment_of(n: int, L1: GLetter, mid: int, L2: GLetter, cal: Calibration) -> Segment:
    s = sector_after(L1, n)
    entry = "l" if L1[2] == 1 else "r"
    exit_ = "r" if L2[2] == 1 else "l"
    if entry != exit_:
        inner = mid != 0
        type1 = inner == cal.inner_is_type1
        return Segment(s, "1" if type1 else "1'", mid, entry == "l")
    if mid == 0:
        raise CurveError("U-turn without winding: word is not reduced")
    return Segment(s, "2" if entry == "l" else "2'", mid, False)


def segment_delta(n: int, seg: Segment, cal: Calibration) -> Mu:
    """mu(next crossing) - mu(previous crossing) along the curve."""
    if seg.kind in ("1", "1'"):
        d = pass_delta(n, seg.sector, seg.kind == "1")
        return _neg(d) if seg.forward else d
    sign = (cal.uturn_left if seg.kind == "2" else cal.uturn_right) * (1 if seg.slit > 0 else -1)
    return (sign, -sign, 0)


def crossing_positions(w: Sequence[GLetter]) -> list[int]:
    return [i for i, L in enumerate(w) if L[0] == "D"]


def segments(n: int, w: Sequence[GLetter], cal: Calibration) -> list[Segment]:
    pos = crossing_positions(w)
    out = []
    for x, y in zip(pos, pos[1:]):
        mid = sum(L[2] for L in w[x + 1 : y])
        out.append(segment_of(n, w[x], mid, w[y], cal))
    return out


def propagate(n: int, w: Sequence[GLetter], anchors: dict[int, Mu], cal: Calibration) -> tuple[Mu, ...]:
    """Fill in every crossing index from the anchored ones; check consistency."""
    segs = segments(n, w, cal)
    m = len(segs) + 1 if crossing_positions(w) else 0
    if m == 0:
        return ()
    if not anchors:
        raise CurveError("no anchor for index propagation")
    mus: list[Mu | None] = [None] * m
    for i, mu in anchors.items():
        mus[i] = mu
    start = min(anchors)
    for i in range(start, m - 1):
        nxt = _add(mus[i], segment_delta(n, segs[i], cal))
        if mus[i + 1] is not None and mus[i + 1] != nxt:
            raise CurveError(f"inconsistent local indices at crossing {i + 1}")
        mus[i + 1] = nxt
    for i in range(start, 0, -1):
        mus[i - 1] = _sub(mus[i], segment_delta(n, segs[i - 1], cal))
    return tuple(mus)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# the curve type


@dataclass(frozen=True)
class CrossingRecord:
    barrier: int
    mu: Mu


@dataclass(frozen=True)
class TrigradedCurve:
    n: int
    start: int
    end: int
    word: tuple[GLetter, ...]
    mus: tuple[Mu, ...]
    cal: Calibration = field(default=DEFAULT, compare=False)

    def __post_init__(self) -> None:
        if self.start == self.end:
            raise CurveError("endpoints must be distinct punctures")
        if not (1 <= self.start <= self.n and 1 <= self.end <= self.n):
            raise CurveError("endpoints must lie in 1..n")
        if len(self.mus) != len(crossing_positions(self.word)):
            raise CurveError("one local index per crossing is required")
        if not self.mus:
            raise CurveError("an arc between distinct punctures crosses some d_j")
        # orientation is forgotten: store the lexicographically smaller direction
        rev = (self.end, self.start, inv_word(self.word), tuple(reversed(self.mus)))
        if rev < (self.start, self.end, self.word, self.mus):
            for name, value in zip(("start", "end", "word", "mus"), rev):
                object.__setattr__(self, name, value)

    @property
    def crossings(self) -> list[CrossingRecord]:
        pos = crossing_positions(self.word)
        return [CrossingRecord(self.word[p][1], mu) for p, mu in zip(pos, self.mus)]

    def segments(self) -> list[Segment]:
        return segments(self.n, self.word, self.cal)

    def check(self) -> "TrigradedCurve":
        """Verify the stored indices obey the propagation rules."""
        if self.mus:
            again = propagate(self.n, self.word, {0: self.mus[0]}, self.cal)
            if again != self.mus:
                raise CurveError("local indices violate the segment rules")
        return self

    def segment_records(self) -> list["SegmentRecord"]:
        """Terminal segments (types 3, 3') and the essential ones in between."""
        n = self.n
        pos = crossing_positions(self.word)
        first, last = self.word[pos[0]], self.word[pos[-1]]
        head = SegmentRecord(self.start, "3" if first[2] == 1 else "3'", self.start)
        tail_sector = sector_after(last, n)
        tail = SegmentRecord(tail_sector, "3'" if last[2] == 1 else "3", self.end)
        mids = [SegmentRecord(s.sector, s.kind) for s in self.segments()]
        return [head, *mids, tail]

    def to_json(self) -> dict:
        items: list[dict] = []
        segs = self.segment_records()
        for i, cr in enumerate(self.crossings):
            items.append(segs[i].to_json())
            items.append({"crossing": cr.barrier, "mu": list(cr.mu)})
        items.append(segs[-1].to_json())
        return {"n": self.n, "endpoints": [self.start, self.end], "path": items}


@dataclass(frozen=True)
class SegmentRecord:
    """``kind`` 3 leaves its puncture towards d_s, 3' towards d_{s-1}."""

    sector: int
    kind: str
    puncture: int | None = None

    def to_json(self) -> dict:
        d: dict = {"segment": self.sector, "type": self.kind}
        if self.puncture is not None:
            d["puncture"] = self.puncture
        return d


def basic_curve(n: int, k: int, cal: Calibration = DEFAULT) -> TrigradedCurve:
    if not 1 <= k <= n:
        raise ValueError(f"k outside 1..{n}")
    return TrigradedCurve(n, k, _wrap(k + 1, n), (("D", k, 1),), ((0, 0, 0),), cal)


def chi_shift(c: TrigradedCurve, r: Mu) -> TrigradedCurve:
    return replace(c, mus=tuple(_add(m, tuple(r)) for m in c.mus))


def _rotate(c: TrigradedCurve, s: int) -> TrigradedCurve:
    n = c.n
    mus = []
    pos = crossing_positions(c.word)
    for p, mu in zip(pos, c.mus):
        j = c.word[p][1]
        if s == 1 and j == n:
            mu = _add(mu, (-n, n, 1))
        elif s == -1 and j == 1:
            mu = _add(mu, (n, -n, -1))
        mus.append(mu)
    return TrigradedCurve(n, _wrap(c.start + s, n), _wrap(c.end + s, n), relabel(c.word, s, n), tuple(mus), c.cal)


def twist(letter: Letter, c: TrigradedCurve) -> TrigradedCurve:
    """Action of one braid generator on a trigraded curve."""
    n = c.n
    if letter.kind == "r":
        return _rotate(c, letter.exp)
    k = letter.index
    forward = c.cal.sigma_variant
    variant = forward if letter.exp == 1 else ("B" if forward == "A" else "A")
    a, b, w = twist_word(n, k, variant, c.start, c.end, c.word)
    old = [cr for cr in c.crossings if cr.barrier != k]
    new_pos = [i for i, p in enumerate(crossing_positions(w)) if w[p][1] != k]
    if len(old) != len(new_pos) or any(w[crossing_positions(w)[i]][1] != cr.barrier for i, cr in zip(new_pos, old)):
        raise CurveError("twist moved crossings outside its support")
    if not old:
        if len(c.mus) != 1 or {c.start, c.end} != {k, _wrap(k + 1, n)}:
            raise CurveError("curve inside the twist region must be the basic arc")
        shift = (-1, 1, 0) if letter.exp == 1 else (1, -1, 0)
        mus = (_add(c.mus[0], shift),)
    else:
        mus = propagate(n, w, {i: cr.mu for i, cr in zip(new_pos, old)}, c.cal)
    return TrigradedCurve(n, a, b, w, mus, c.cal)


def twist_word_action(w: BraidWord, c: TrigradedCurve) -> TrigradedCurve:
    for letter in reversed(w.letters):
        c = twist(letter, c)
    return c


# ---------------------------------------------------------------------------
# the associated complex


def crossing_summand(n: int, barrier: int, mu: Mu) -> ShiftedProjective:
    m1, m2, m3 = mu
    return ShiftedProjective(barrier, m1 + n * m3, m2 - n * m3, -m3)


def curve_complex(c: TrigradedCurve) -> ProjComplex:
    n = c.n
    crs = c.crossings
    S = [crossing_summand(n, cr.barrier, cr.mu) for cr in crs]
    D: dict[tuple[int, int], AlgebraElement] = {}
    for i in range(len(S) - 1):
        u, v = i, i + 1
        if S[v].coh == S[u].coh - 1:
            u, v = v, u
        elif S[v].coh != S[u].coh + 1:
            raise CurveError("adjacent crossings must differ by one cohomological degree")
        ku, kv = S[u].vertex, S[v].vertex
        el = loop(n, ku) if ku == kv else arrow(n, ku, kv)
        D[(u, v)] = AlgebraElement.of(el)
    eps = (crs[0].barrier + n * S[0].g3) % 2 if crs else 0
    return ProjComplex(n, S, D, eps).validate()


# ---------------------------------------------------------------------------
# k-strings

RelLetter = tuple[str, int, int]
StringShape = tuple[str, str, tuple[RelLetter, ...]]

FAMILIES = ("I", "II", "II'", "III", "III'", "IV", "IV'", "V", "V'", "VI")


@dataclass(frozen=True)
class KString:
    k: int
    family: str
    u: int
    base: Mu
    shape: StringShape = field(compare=False, default=("L", "L", ()))

    def to_json(self) -> dict:
        return {"k": self.k, "family": self.family, "u": self.u, "base": list(self.base)}


def _norm_shape(s: StringShape) -> StringShape:
    a, b, w = s
    r = (b, a, inv_word(w))
    return min(s, r)


def _twist_shape(s: StringShape, variant: str) -> StringShape:
    """The half twist on a string inside the double sector, in relative labels.

    Puncture ends are ``P1``/``P2``; boundary ends ``L``/``R`` are fixed.
    """
    a, b, w = s
    images, ends = _half_twist(variant)
    out: list[GLetter] = []
    for L in w:
        if L[0] == "C":
            img = images[L[1]]
            out.extend(img if L[2] == 1 else inv_word(img))
        else:
            out.append(L)
    pa = ends[int(a[1])] if a[0] == "P" else ()
    pb = ends[int(b[1])] if b[0] == "P" else ()
    w2 = reduce_word(inv_word(pa) + tuple(out) + pb)
    swap = {"P1": "P2", "P2": "P1"}
    a2, b2 = swap.get(a, a), swap.get(b, b)
    while w2 and a2[0] == "P" and w2[0][0] == "C" and w2[0][1] == int(a2[1]):
        w2 = w2[1:]
    while w2 and b2[0] == "P" and w2[-1][0] == "C" and w2[-1][1] == int(b2[1]):
        w2 = w2[:-1]
    return a2, b2, w2


C1, C2, DM = ("C", 1, 1), ("C", 2, 1), ("D", 1, 1)

# minimal representatives of the moving families, winding zero
ZERO_SHAPES: dict[StringShape, str] = {
    _norm_shape(("L", "R", (C1, DM))): "I",
    _norm_shape(("L", "L", (("C", 1, -1),))): "II",
    _norm_shape(("R", "R", (("C", 2, -1),))): "II'",
    _norm_shape(("L", "P1", ())): "III",
    _norm_shape(("P2", "R", ())): "III'",
}
FIXED_LR = {
    _norm_shape(("L", "R", (DM,))): "IV",
    _norm_shape(("L", "R", (C1, DM, C2))): "IV'",
}


def _classify_shape(s: StringShape) -> tuple[str, int]:
    s = _norm_shape(s)
    if s == _norm_shape(("P1", "P2", (DM,))):
        return "VI", 0
    if _norm_shape(_twist_shape(s, "A")) == s:
        if s in FIXED_LR:
            return FIXED_LR[s], 0
        ends = {s[0], s[1]}
        if ends == {"L"}:
            return "V", 0
        if ends == {"R"}:
            return "V'", 0
        raise CurveError(f"unclassifiable fixed string {s}")
    if s in ZERO_SHAPES:
        return ZERO_SHAPES[s], 0
    depth = sum(1 for L in s[2] if L[0] == "D") + 2
    fwd = back = s
    for step in range(1, depth + 1):
        back = _norm_shape(_twist_shape(back, "B"))
        if back in ZERO_SHAPES:
            return ZERO_SHAPES[back], step
        fwd = _norm_shape(_twist_shape(fwd, "A"))
        if fwd in ZERO_SHAPES:
            return ZERO_SHAPES[fwd], -step
    raise CurveError(f"unclassifiable string {s}")


@dataclass
class _RawString:
    start: tuple[str, int]
    letters: list[GLetter]
    mus: list[Mu | None]
    start_mu: Mu | None
    end: tuple[str, int] = ("", 0)
    end_mu: Mu | None = None


def _cut(c: TrigradedCurve, k: int) -> list[_RawString]:
    n = c.n
    left, right = _wrap(k - 1, n), _wrap(k + 1, n)
    inside = (k, _wrap(k + 1, n))
    pos = crossing_positions(c.word)
    mu_at = dict(zip(pos, c.mus))
    out: list[_RawString] = []
    cur = _RawString(("P", c.start), [], [], None) if c.start in inside else None
    for i, L in enumerate(c.word):
        if L[0] == "D" and L[1] in (left, right):
            if cur is not None:
                cur.end, cur.end_mu = ("B", L[1]), mu_at[i]
                out.append(cur)
                cur = None
            if sector_after(L, n) in inside:
                cur = _RawString(("B", L[1]), [], [], mu_at[i])
        elif cur is not None:
            cur.letters.append(L)
            cur.mus.append(mu_at.get(i))
    if cur is not None:
        cur.end = ("P", c.end)
        out.append(cur)
    return out


def k_strings(c: TrigradedCurve, k: int) -> list[KString]:
    """Decompose ``c`` into its components inside D_k and D_{k+1}."""
    n = c.n
    if not 1 <= k <= n:
        raise ValueError(f"k outside 1..{n}")
    left = _wrap(k - 1, n)

    def tag(e: tuple[str, int]) -> str:
        if e[0] == "P":
            return "P1" if e[1] == k else "P2"
        return "L" if e[1] == left else "R"

    out = []
    for raw in _cut(c, k):
        w = tuple((a, 1 if j == k else 2, e) for a, j, e in raw.letters)
        shape = (tag(raw.start), tag(raw.end), w)
        family, u = _classify_shape(shape)
        if family == "VI":
            base = next(m for m in raw.mus if m is not None)
        elif family in ("I", "IV", "IV'"):
            base = raw.start_mu if shape[0] == "L" else raw.end_mu
        elif family in ("II", "II'", "V", "V'"):
            base = min(raw.start_mu, raw.end_mu)
        else:
            base = raw.start_mu if raw.start_mu is not None else raw.end_mu
        out.append(KString(k, family, u, base, _norm_shape(shape)))
    return sorted(out, key=lambda s: (FAMILIES.index(s.family), s.u, s.base))


# ---------------------------------------------------------------------------
# intersection numbers against basic curves

GEOMETRIC_WEIGHT = {
    "I": Fraction(1),
    "II": Fraction(1),
    "II'": Fraction(1),
    "III": Fraction(1, 2),
    "III'": Fraction(1, 2),
    "VI": Fraction(1),
}


def geometric_intersection_with_basic(k: int, c: TrigradedCurve) -> Fraction:
    return sum((GEOMETRIC_WEIGHT.get(s.family, Fraction(0)) for s in k_strings(c, k)), Fraction(0))


def _q(text: str) -> LaurentPoly:
    from .laurent import parse

    return parse(text, Q3)


@lru_cache(maxsize=None)
def contribution_table(n: int, k: int) -> dict[str, LaurentPoly]:
    """Contribution of each winding-zero family with base index zero."""
    t = {
        "I": _q("1 + q1*q2^-1"),
        "II": _q("1 + q1*q2^-1"),
        "II'": _q("q1 + q2"),
        "III": _q("1"),
        "III'": _q("q2"),
        "VI": _q("1 + q2"),
    }
    if k == 1:
        t["I"] = _q("q3^-1 + q1*q2^-1*q3^-1")
        t["II"] = _q("q3^-1 + q1*q2^-1*q3^-1")
        t["III"] = _q("q3^-1")
    if k == n:
        t["II'"] = _q("q1*q3 + q2*q3")
        t["III'"] = _q("q2*q3")
    return t


# offset from the recorded boundary index to the index the table is stated for
BASE_OFFSET: dict[str, Mu] = {f: (0, 0, 0) for f in FAMILIES}
WINDING_SIGN = -1


def index_monomial(n: int, r: Mu) -> LaurentPoly:
    r1, r2, r3 = r
    return LaurentPoly.monomial(Q3, (r1 + n * r3, r2 - n * r3, -r3))


def string_contribution(n: int, s: KString) -> LaurentPoly:
    table = contribution_table(n, s.k)
    if s.family not in table:
        return LaurentPoly.zero(Q3)
    base = s.base
    wind = LaurentPoly.monomial(Q3, (WINDING_SIGN * s.u, -WINDING_SIGN * s.u, 0))
    return table[s.family] * index_monomial(n, base) * wind


def trigraded_intersection_with_basic(k: int, c: TrigradedCurve) -> LaurentPoly:
    total = LaurentPoly.zero(Q3)
    for s in k_strings(c, k):
        total = total + string_contribution(c.n, s)
    return total
