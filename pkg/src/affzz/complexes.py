"""Bounded complexes of shifted projective R_n-modules and the braid action on them.

A summand ``ShiftedProjective(v, coh, g1, g3)`` is P_v placed in cohomological
degree ``coh`` with internal shifts {g1}<g3>.  A differential entry from
summand u to summand v is right multiplication by a path from vertex(u) to
vertex(v); composing u -> v -> w gives the algebra product a_uv * a_vw.
Homogeneity means ``g(u) = g(v) + deg(a_uv)`` in the first and third gradings.

The path-length parity is not stored per summand.  It is recovered from the
vertex, the third shift and one bit ``eps`` per complex, which is all the
Grothendieck class needs (parity contributes a sign there).
"""

from __future__ import annotations

import json
import os
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import AlgebraElement, Path, idem, loop, paths_between, tridegree, wrap, arrow
from .braid import BraidWord, Letter
from .laurent import Q3, TS, LaurentPoly


class InvariantViolation(RuntimeError):
    """A structural invariant (homogeneity, d^2 = 0, freeness) failed."""


@dataclass(frozen=True, order=True)
class ShiftedProjective:
    vertex: int
    coh: int
    g1: int
    g3: int

    def key(self) -> tuple[int, int, int, int]:
        return (self.coh, self.vertex, self.g1, self.g3)

    def shifted(self, dcoh: int = 0, dg1: int = 0, dg3: int = 0) -> "ShiftedProjective":
        return ShiftedProjective(self.vertex, self.coh + dcoh, self.g1 + dg1, self.g3 + dg3)


@dataclass
class ProjComplex:
    n: int
    summands: list[ShiftedProjective]
    diff: dict[tuple[int, int], AlgebraElement] = field(default_factory=dict)
    eps: int = 0

    # -- basic structure ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.summands)

    def entry(self, u: int, v: int) -> AlgebraElement:
        return self.diff.get((u, v)) or AlgebraElement.zero(self.n)

    def parity(self, u: int) -> int:
        s = self.summands[u]
        return (s.vertex + self.n * s.g3 + self.eps) % 2

    def validate(self) -> "ProjComplex":
        """Check homogeneity and d^2 = 0; raise InvariantViolation otherwise."""
        S = self.summands
        out: dict[int, list[tuple[int, AlgebraElement]]] = defaultdict(list)
        for (u, v), a in self.diff.items():
            if a.is_zero():
                continue
            su, sv = S[u], S[v]
            if sv.coh != su.coh + 1:
                raise InvariantViolation(f"entry {u}->{v} does not raise degree by one")
            for p, _ in a.items():
                d = tridegree(p)
                if p.source != su.vertex or p.target != sv.vertex:
                    raise InvariantViolation(f"entry {u}->{v}: path {p} has wrong endpoints")
                if su.g1 != sv.g1 + d.d1 or su.g3 != sv.g3 + d.d3:
                    raise InvariantViolation(f"entry {u}->{v}: {a} is not homogeneous")
            out[u].append((v, a))
        for u, lst in out.items():
            acc: dict[int, AlgebraElement] = {}
            for v, a in lst:
                for w, b in out.get(v, ()):
                    acc[w] = acc[w] + a * b if w in acc else a * b
            for w, c in acc.items():
                if not c.is_zero():
                    raise InvariantViolation(f"d^2 != 0 from {u} to {w}: {c}")
        return self

    def sorted_summands(self) -> list[ShiftedProjective]:
        return sorted(self.summands, key=ShiftedProjective.key)

    def canonical(self) -> "ProjComplex":
        """Reorder summands by (coh, vertex, g1, g3), stable on ties."""
        order = sorted(range(len(self.summands)), key=lambda i: (self.summands[i].key(), i))
        pos = {old: new for new, old in enumerate(order)}
        diff = {(pos[u], pos[v]): a for (u, v), a in self.diff.items() if not a.is_zero()}
        return ProjComplex(self.n, [self.summands[i] for i in order], diff, self.eps)

    def shift(self, dcoh: int = 0, dg1: int = 0, dg3: int = 0) -> "ProjComplex":
        S = [s.shifted(dcoh, dg1, dg3) for s in self.summands]
        eps = (self.eps + self.n * dg3) % 2
        return ProjComplex(self.n, S, dict(self.diff), eps)

    def to_json(self) -> dict:
        C = self.canonical()
        diff = [
            {"from": u, "to": v, "element": str(a)}
            for (u, v), a in sorted(C.diff.items())
            if not a.is_zero()
        ]
        return {
            "n": C.n,
            "summands": [{"vertex": s.vertex, "coh": s.coh, "g1": s.g1, "g3": s.g3} for s in C.summands],
            "differential": diff,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def projective(n: int, i: int, coh: int = 0, g1: int = 0, g3: int = 0) -> ProjComplex:
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} outside 1..{n}")
    eps = (i + n * g3) % 2
    return ProjComplex(n, [ShiftedProjective(i, coh, g1, g3)], {}, eps)


def direct_sum(parts: Iterable[ProjComplex]) -> ProjComplex:
    parts = list(parts)
    n = parts[0].n
    eps = parts[0].eps
    S: list[ShiftedProjective] = []
    D: dict[tuple[int, int], AlgebraElement] = {}
    for P in parts:
        if P.eps != eps:
            raise ValueError("summands with incompatible parity conventions")
        off = len(S)
        S.extend(P.summands)
        D.update({(u + off, v + off): a for (u, v), a in P.diff.items()})
    return ProjComplex(n, S, D, eps)


# ---------------------------------------------------------------------------
# the generator functors


def _tensor_sigma(i: int, C: ProjComplex) -> ProjComplex:
    """F_i (x) C with F_i = (P_i (x) iP -> R_n), R_n in degree 0."""
    n = C.n
    S: list[ShiftedProjective] = []
    D: dict[tuple[int, int], AlgebraElement] = {}
    top: dict[int, int] = {}
    low: dict[tuple[int, Path], int] = {}
    for u, s in enumerate(C.summands):
        for x, _ in paths_between(n, i, s.vertex):
            d = tridegree(x)
            low[(u, x)] = len(S)
            S.append(ShiftedProjective(i, s.coh - 1, s.g1 + d.d1, s.g3 + d.d3))
        top[u] = len(S)
        S.append(s)
    for (u, x), k in low.items():
        D[(k, top[u])] = AlgebraElement.of(x)
    ei = AlgebraElement.of(idem(n, i))
    for (u, v), a in C.diff.items():
        if a.is_zero():
            continue
        D[(top[u], top[v])] = a
        for x, _ in paths_between(n, i, C.summands[u].vertex):
            prod = AlgebraElement.of(x) * a
            for y, c in prod.items():
                D[(low[(u, x)], low[(v, y)])] = ei.scale(-c)
    return ProjComplex(n, S, D, C.eps)


def _tensor_sigma_inv(i: int, C: ProjComplex) -> ProjComplex:
    """F'_i (x) C with F'_i = (R_n -> P_i (x) iP {-1}), R_n in degree 0."""
    n = C.n
    S: list[ShiftedProjective] = []
    D: dict[tuple[int, int], AlgebraElement] = {}
    top: dict[int, int] = {}
    high: dict[tuple[int, Path], int] = {}
    for u, s in enumerate(C.summands):
        top[u] = len(S)
        S.append(s)
        for x, _ in paths_between(n, i, s.vertex):
            d = tridegree(x)
            high[(u, x)] = len(S)
            S.append(ShiftedProjective(i, s.coh + 1, s.g1 + d.d1 - 1, s.g3 + d.d3))
    for u, s in enumerate(C.summands):
        j = s.vertex
        if j == i:
            D[(top[u], high[(u, loop(n, i))])] = AlgebraElement.of(idem(n, i))
            D[(top[u], high[(u, idem(n, i))])] = AlgebraElement.of(loop(n, i))
        elif j in (wrap(i - 1, n), wrap(i + 1, n)):
            D[(top[u], high[(u, arrow(n, i, j))])] = AlgebraElement.of(arrow(n, j, i))
    ei = AlgebraElement.of(idem(n, i))
    for (u, v), a in C.diff.items():
        if a.is_zero():
            continue
        D[(top[u], top[v])] = a
        for x, _ in paths_between(n, i, C.summands[u].vertex):
            prod = AlgebraElement.of(x) * a
            for y, c in prod.items():
                D[(high[(u, x)], high[(v, y)])] = ei.scale(-c)
    return ProjComplex(n, S, D, C.eps)


def _rotate(C: ProjComplex, k: int) -> ProjComplex:
    """Tensor with T^rho (k = 1) or its inverse bimodule (k = -1)."""
    n = C.n
    S = []
    for s in C.summands:
        v = s.vertex + k
        g3 = s.g3
        if v > n:
            v, g3 = 1, g3 - 1
        elif v < 1:
            v, g3 = n, g3 + 1
        S.append(ShiftedProjective(v, s.coh, s.g1, g3))
    D = {uv: a.rotate(k) for uv, a in C.diff.items() if not a.is_zero()}
    return ProjComplex(n, S, D, C.eps ^ 1)


def apply_generator(letter: Letter, C: ProjComplex, check: bool = True) -> ProjComplex:
    if letter.kind == "r":
        out = _rotate(C, letter.exp)
    elif letter.exp == 1:
        out = _tensor_sigma(letter.index, C)
    else:
        out = _tensor_sigma_inv(letter.index, C)
    return out.validate() if check else out


def apply_word(w: BraidWord, C: ProjComplex, minimal: bool = True, check: bool = True) -> ProjComplex:
    if w.n != C.n:
        raise ValueError("word and complex have different n")
    for letter in reversed(w.letters):
        C = apply_generator(letter, C, check=check)
        if minimal:
            C = minimize(C)
    return C


# ---------------------------------------------------------------------------
# Gaussian elimination


def _find_pivot(C: ProjComplex) -> tuple[int, int, int] | None:
    S = C.summands
    order = sorted(range(len(S)), key=lambda u: (S[u].coh, u))
    rank = {u: r for r, u in enumerate(order)}
    best = None
    for (u, v), a in C.diff.items():
        su, sv = S[u], S[v]
        if su.vertex != sv.vertex or su.g1 != sv.g1 or su.g3 != sv.g3:
            continue
        c = a.coeff(idem(C.n, su.vertex))
        if c in (1, -1):
            key = (rank[u], rank[v])
            if best is None or key < best[0]:
                best = (key, u, v, c)
    return None if best is None else best[1:]


def minimize(C: ProjComplex, check: bool = True) -> ProjComplex:
    """Cancel every invertible entry; deterministic pivot order."""
    S = list(C.summands)
    D = {uv: a for uv, a in C.diff.items() if not a.is_zero()}
    C = ProjComplex(C.n, S, D, C.eps)
    while True:
        piv = _find_pivot(C)
        if piv is None:
            break
        u, v, c = piv
        incoming = [(x, a) for (x, y), a in C.diff.items() if y == v and x != u]
        outgoing = [(y, b) for (x, y), b in C.diff.items() if x == u and y != v]
        D = dict(C.diff)
        for x, a in incoming:
            for y, b in outgoing:
                upd = (a * b).scale(c)
                cur = D.get((x, y))
                new = cur - upd if cur is not None else -upd
                if new.is_zero():
                    D.pop((x, y), None)
                else:
                    D[(x, y)] = new
        keep = [k for k in range(len(C.summands)) if k not in (u, v)]
        pos = {old: new for new, old in enumerate(keep)}
        D2 = {(pos[x], pos[y]): a for (x, y), a in D.items() if x in pos and y in pos and not a.is_zero()}
        C = ProjComplex(C.n, [C.summands[k] for k in keep], D2, C.eps)
    return C.validate() if check else C


# ---------------------------------------------------------------------------
# Hom spaces and Grothendieck classes


def _hom_cells(k: int, C: ProjComplex) -> dict[tuple[int, int], dict[int, list[tuple[int, Path]]]]:
    """Basis of Hom(P_k, C) grouped by (q2, q3) degree, then cohomological degree."""
    cells: dict[tuple[int, int], dict[int, list[tuple[int, Path]]]] = defaultdict(lambda: defaultdict(list))
    for u, s in enumerate(C.summands):
        for x, _ in paths_between(C.n, k, s.vertex):
            d = tridegree(x)
            cells[(s.g1 + d.d1, s.g3 + d.d3)][s.coh].append((u, x))
    return cells


def _rank_and_torsion(rows: list[list[int]]) -> tuple[int, list[int]]:
    """Rank and the non-unit invariant factors of an integer matrix."""
    if not rows or not rows[0]:
        return 0, []
    nz = [r for r in rows if any(r)]
    if not nz:
        return 0, []
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.normalforms import invariant_factors

    M = DomainMatrix([[ZZ(v) for v in r] for r in nz], (len(nz), len(nz[0])), ZZ)
    inv = [int(f) for f in invariant_factors(M) if f != 0]
    return len(inv), [f for f in inv if abs(f) != 1]


def hom_poincare(k: int, C: ProjComplex) -> LaurentPoly:
    """Graded rank of Hom(P_k, C) in the homotopy category as a polynomial in q1, q2, q3."""
    terms: dict[tuple[int, int, int], int] = {}
    out_edges: dict[int, list[tuple[int, AlgebraElement]]] = defaultdict(list)
    for (u, v), a in C.diff.items():
        if not a.is_zero():
            out_edges[u].append((v, a))
    for (e2, e3), bycoh in sorted(_hom_cells(k, C).items()):
        index = {m: {b: r for r, b in enumerate(basis)} for m, basis in bycoh.items()}
        ranks: dict[int, int] = {}
        for m, basis in bycoh.items():
            tgt = index.get(m + 1)
            if not tgt:
                ranks[m] = 0
                continue
            rows = [[0] * len(basis) for _ in range(len(tgt))]
            for col, (u, x) in enumerate(basis):
                for v, a in out_edges.get(u, ()):
                    for y, c in (AlgebraElement.of(x) * a).items():
                        r = tgt.get((v, y))
                        if r is not None:
                            rows[r][col] += c
            rk, tors = _rank_and_torsion(rows)
            if tors:
                raise InvariantViolation(f"torsion {tors} in Hom(P_{k}, C) at degree {(m + 1, e2, e3)}")
            ranks[m] = rk
        for m, basis in bycoh.items():
            h = len(basis) - ranks.get(m, 0) - ranks.get(m - 1, 0)
            if h:
                terms[(m, e2, e3)] = h
    return LaurentPoly(Q3, terms)


def hom_table(C: ProjComplex, workers: int | None = None) -> list[LaurentPoly]:
    ks = range(1, C.n + 1)
    workers = workers or worker_count()
    if workers <= 1:
        return [hom_poincare(k, C) for k in ks]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda k: hom_poincare(k, C), ks))


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("AFFZZ_THREADS", "1")))
    except ValueError:
        return 1


def k_class(C: ProjComplex) -> list[LaurentPoly]:
    vec = [LaurentPoly.zero(TS) for _ in range(C.n)]
    for u, s in enumerate(C.summands):
        sign = -1 if (s.coh + C.parity(u)) % 2 else 1
        vec[s.vertex - 1] = vec[s.vertex - 1] + LaurentPoly.monomial(TS, (s.g1, s.g3), sign)
    return vec


def equivalent(A: ProjComplex, B: ProjComplex) -> bool:
    """Proxy for isomorphism of minimal complexes: same summands and same Hom table."""
    if A.n != B.n:
        return False
    if Counter(A.summands) != Counter(B.summands):
        return False
    return hom_table(A) == hom_table(B)


# ---------------------------------------------------------------------------
# identification of braid words


@dataclass
class Verdict:
    kind: str  # "identity" | "central_power" | "nontrivial"
    power: int = 0
    certificate: dict | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.kind == "central_power":
            out["power"] = self.power
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def word_images(w: BraidWord) -> list[ProjComplex]:
    return [apply_word(w, projective(w.n, i)) for i in range(1, w.n + 1)]


def identify(w: BraidWord) -> Verdict:
    images = word_images(w)
    powers = set()
    for i, M in enumerate(images, start=1):
        if len(M) != 1 or M.summands[0].vertex != i:
            powers = None
            break
        s = M.summands[0]
        if s.coh != 0 or s.g1 != 0:
            powers = None
            break
        powers.add(-s.g3)
    if powers is not None and len(powers) == 1:
        p = powers.pop()
        return Verdict("identity") if p == 0 else Verdict("central_power", p)
    for i, M in enumerate(images, start=1):
        s0 = M.summands[0] if len(M) == 1 else None
        if s0 is None or s0 != ShiftedProjective(i, 0, 0, s0.g3):
            break
    else:
        i = 1
    M = images[i - 1]
    cert = {
        "i": i,
        "summands": [[s.vertex, s.coh, s.g1, s.g3] for s in M.sorted_summands()],
        "hom": {str(k): str(p) for k, p in enumerate(hom_table(M), start=1)},
    }
    return Verdict("nontrivial", certificate=cert)
