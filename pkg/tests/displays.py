"""Generator matrices transcribed entry by entry from their printed form.

Entries are strings; anything not listed is 0 (off the diagonal) or 1 (on the
diagonal when ``unit`` is set).  Rows and columns are 0-based.
"""

from __future__ import annotations

from affzz.laurent import TQ, TS, LaurentPoly, VarSet, parse


def build(vs: VarSet, size: int, entries: dict[tuple[int, int], str], unit: bool = True):
    rows = []
    for r in range(size):
        row = []
        for c in range(size):
            if (r, c) in entries:
                row.append(parse(entries[(r, c)], vs))
            elif unit and r == c:
                row.append(LaurentPoly.const(vs, 1))
            else:
                row.append(LaurentPoly.zero(vs))
        rows.append(tuple(row))
    return tuple(rows)


def h_sigma(n: int, i: int):
    return build(TQ, n + 1, {(i, i): "0", (i, i + 1): "t", (i + 1, i): "1", (i + 1, i + 1): "1 - t"})


def h_sigma0_squared(n: int):
    return build(TQ, n + 1, {(0, 0): "t", (0, 1): "t - t^2", (1, 0): "1 - q", (1, 1): "1 + t*q - t"})


def h_rho(n: int):
    e = {
        (0, 0): "t",
        (0, n): f"t^{n} - t^{n + 1}",
        (1, 0): "1 - q",
        (1, n): f"t^{n - 1} - t^{n} + q*t^{n}",
    }
    for j in range(2, n + 1):
        e[(j, j - 1)] = "1"
        e[(j, n)] = f"t^{n - j} - t^{n - j + 1}"
    return build(TQ, n + 1, e, unit=False)


def rh_sigma(n: int, i: int):
    if i == 1:
        return build(TQ, n, {(0, 0): "-t", (0, 1): "t", (0, n - 1): f"t^{n}*q"})
    r = i - 1
    return build(TQ, n, {(r, r - 1): "1", (r, r): "-t", (r, r + 1): "t"})


def rh_rho(n: int):
    e = {(0, n - 1): f"t^{n}*q"}
    e.update({(j, j - 1): "1" for j in range(1, n)})
    return build(TQ, n, e, unit=False)


def aks_sigma(n: int, i: int, printed_sign: bool = False):
    """``printed_sign`` keeps the literal -t right of the diagonal entry."""
    if i == 1:
        return build(TS, n, {(0, 0): "-t", (0, 1): "t", (0, n - 1): "s^-1"})
    if i == n:
        return build(TS, n, {(n - 1, 0): "t*s", (n - 1, n - 2): "1", (n - 1, n - 1): "-t"})
    r = i - 1
    return build(TS, n, {(r, r - 1): "1", (r, r): "-t", (r, r + 1): "-t" if printed_sign else "t"})


def aks_rho(n: int):
    e = {(0, n - 1): "s^-1"}
    e.update({(j, j - 1): "1" for j in range(1, n)})
    return build(TS, n, e, unit=False)


def aks_rho_inv(n: int):
    e = {(n - 1, 0): "s"}
    e.update({(j, j + 1): "1" for j in range(n - 1)})
    return build(TS, n, e, unit=False)
