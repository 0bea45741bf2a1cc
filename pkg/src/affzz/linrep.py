"""Matrix representations of the extended affine braid group.

Three families are available:

``h``    size n+1 over Z[t, q], basis x_0 .. x_n of the relative homology;
``rh``   size n over Z[t, q], the reduced homological representation;
``aks``  size n over Z[t, s], the decategorified action on [P_1] .. [P_n].

Matrices act on column vectors, column j being the image of basis vector j,
so the matrix of a word is the ordered product of its letters' matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, Letter, rho, sigma
from .laurent import TQ, TS, LaurentPoly, VarSet

REPS = ("h", "rh", "aks")

Matrix = tuple[tuple[LaurentPoly, ...], ...]


def varset_for(rep: str) -> VarSet:
    return TS if rep == "aks" else TQ


def size_for(rep: str, n: int) -> int:
    return n + 1 if rep == "h" else n


@dataclass(frozen=True)
class RepMatrix:
    rep: str
    n: int
    rows: Matrix

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[LaurentPoly]:
        return [r[j] for r in self.rows]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.rep, self.n, matmul(self.rows, other.rows))

    def to_json(self) -> list[list[str]]:
        return [[str(p) for p in r] for r in self.rows]

    def table(self) -> str:
        cells = self.to_json()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)


# ---------------------------------------------------------------------------
# exact matrix arithmetic


def identity(vs: VarSet, m: int) -> Matrix:
    one, zero = LaurentPoly.const(vs, 1), LaurentPoly.zero(vs)
    return tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m = len(a)
    vs = a[0][0].varset
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = LaurentPoly.zero(vs)
            for k in range(m):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def determinant(a: Matrix) -> LaurentPoly:
    """Laplace expansion along the first row with memoised minors."""
    m = len(a)
    vs = a[0][0].varset

    @lru_cache(maxsize=None)
    def det(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return LaurentPoly.const(vs, 1)
        acc = LaurentPoly.zero(vs)
        for pos, c in enumerate(cols):
            if a[row][c]:
                sub = det(row + 1, cols[:pos] + cols[pos + 1 :])
                term = a[row][c] * sub
                acc = acc - term if pos % 2 else acc + term
        return acc

    return det(0, tuple(range(m)))


def inverse(a: Matrix) -> Matrix:
    """Adjugate over the unit-monomial determinant."""
    m = len(a)
    d = determinant(a)
    if not d.is_monomial() or abs(next(iter(d.terms.values()))) != 1:
        raise ArithmeticError(f"determinant {d} is not a unit")
    dinv = d ** -1
    out = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            minor = tuple(tuple(a[r][c] for c in range(m) if c != j) for r in range(m) if r != i)
            cof = determinant(minor) if minor else LaurentPoly.const(d.varset, 1)
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof * dinv
    return tuple(tuple(r) for r in out)


def _build(vs: VarSet, m: int, entries: dict[tuple[int, int], LaurentPoly], base_identity: bool = True) -> Matrix:
    zero = LaurentPoly.zero(vs)
    rows = [list(r) for r in identity(vs, m)] if base_identity else [[zero] * m for _ in range(m)]
    for (i, j), p in entries.items():
        rows[i][j] = p
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# generator data


def _tq(n_t: int = 0, n_q: int = 0, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(TQ, (n_t, n_q), c)


def _ts(n_t: int = 0, n_s: int = 0, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(TS, (n_t, n_s), c)


def h_sigma(n: int, i: int) -> Matrix:
    """Basis x_0..x_n; block on x_i, x_{i+1} for 1 <= i <= n-1."""
    one = _tq()
    t = _tq(1)
    return _build(TQ, n + 1, {(i, i): one - one, (i, i + 1): t, (i + 1, i): one, (i + 1, i + 1): one - t})


def h_rho(n: int) -> Matrix:
    one, t, q = _tq(), _tq(1), _tq(0, 1)
    e: dict[tuple[int, int], LaurentPoly] = {(0, 0): t, (0, n): _tq(n) * (one - t), (1, 0): one - q}
    e[(1, n)] = _tq(n - 1) * (one - t + q * t)
    for j in range(2, n + 1):
        e[(j, j - 1)] = one
        e[(j, n)] = _tq(n - j) * (one - t) if j < n else one - t
    return _build(TQ, n + 1, e, base_identity=False)


def h_sigma0_squared(n: int) -> Matrix:
    """Stored reference data for the square of the extra finite-type generator."""
    one, t, q = _tq(), _tq(1), _tq(0, 1)
    return _build(TQ, n + 1, {(0, 0): t, (0, 1): t * (one - t), (1, 0): one - q, (1, 1): one + t * q - t})


def rh_sigma(n: int, i: int) -> Matrix:
    t = _tq(1)
    r = i - 1  # 0-based row of gamma_i
    if i == 1:
        return _build(TQ, n, {(0, 0): -t, (0, 1): t, (0, n - 1): _tq(n, 1)})
    return _build(TQ, n, {(r, r - 1): _tq(), (r, r): -t, (r, r + 1): t})


def rh_rho(n: int) -> Matrix:
    e = {(0, n - 1): _tq(n, 1)}
    for j in range(1, n):
        e[(j, j - 1)] = _tq()
    return _build(TQ, n, e, base_identity=False)


def aks_sigma(n: int, i: int) -> Matrix:
    t = _ts(1)
    if i == 1:
        return _build(TS, n, {(0, 0): -t, (0, 1): t, (0, n - 1): _ts(0, -1)})
    if i == n:
        return _build(TS, n, {(n - 1, 0): _ts(1, 1), (n - 1, n - 2): _ts(), (n - 1, n - 1): -t})
    r = i - 1
    # the printed sign of the last entry is corrected to +t (see notes)
    return _build(TS, n, {(r, r - 1): _ts(), (r, r): -t, (r, r + 1): t})


def aks_rho(n: int, exp: int) -> Matrix:
    if exp == 1:
        e = {(0, n - 1): _ts(0, -1)}
        e.update({(j, j - 1): _ts() for j in range(1, n)})
    else:
        e = {(n - 1, 0): _ts(0, 1)}
        e.update({(j, j + 1): _ts() for j in range(n - 1)})
    return _build(TS, n, e, base_identity=False)


@lru_cache(maxsize=None)
def generator_matrix(rep: str, n: int, letter: Letter) -> Matrix:
    if rep not in REPS:
        raise ValueError(f"unknown representation {rep!r}")
    if letter.exp == -1:
        if rep == "aks" and letter.kind == "r":
            return aks_rho(n, -1)
        return inverse(generator_matrix(rep, n, letter.inverse()))
    if letter.kind == "r":
        return {"h": h_rho, "rh": rh_rho, "aks": lambda m: aks_rho(m, 1)}[rep](n)
    i = letter.index
    if rep == "aks":
        return aks_sigma(n, i)
    if i == n:
        r = generator_matrix(rep, n, rho())
        return matmul(matmul(r, generator_matrix(rep, n, sigma(n - 1))), generator_matrix(rep, n, rho(-1)))
    return h_sigma(n, i) if rep == "h" else rh_sigma(n, i)


def rep_matrix(rep: str, w: BraidWord) -> RepMatrix:
    rep = rep.lower()
    m = identity(varset_for(rep), size_for(rep, w.n))
    for letter in w.letters:
        m = matmul(m, generator_matrix(rep, w.n, letter))
    return RepMatrix(rep, w.n, m)


def specialization_map(n: int) -> dict[str, LaurentPoly]:
    """t -> t, s -> q^-1 t^-n."""
    return {"t": _tq(1), "s": _tq(-n, -1)}


def specialize_matrix(m: RepMatrix) -> Matrix:
    sub = specialization_map(m.n)
    return tuple(tuple(p.specialize(sub, TQ) for p in r) for r in m.rows)


def check_specialization(w: BraidWord) -> bool:
    return specialize_matrix(rep_matrix("aks", w)) == rep_matrix("rh", w).rows


def sigma0_squared_word(n: int) -> BraidWord:
    """Candidate word r (s_1 .. s_{n-1})^-1 for the stored square matrix."""
    return BraidWord(n, (rho(),) + tuple(sigma(i, -1) for i in range(n - 1, 0, -1)))


def check_sigma0_squared(n: int) -> bool:
    """Documented conjecture check for the stored reference matrix."""
    return rep_matrix("h", sigma0_squared_word(n)).rows == h_sigma0_squared(n)
