from __future__ import annotations

import itertools

import pytest

from affzz.algebra import (
    AlgebraElement,
    TriDegree,
    arrow,
    basis,
    idem,
    loop,
    multiply,
    paths_between,
    tridegree,
)


def test_arrow_products():
    assert multiply(arrow(4, 1, 2), arrow(4, 2, 1)) == loop(4, 1)
    assert multiply(arrow(4, 1, 2), arrow(4, 2, 3)) is None
    assert multiply(loop(4, 1), arrow(4, 1, 2)) is None
    assert multiply(idem(4, 1), idem(4, 2)) is None


def test_both_loop_factorisations_agree():
    for n in (3, 4, 5):
        for i in range(1, n + 1):
            j, h = i % n + 1, (i - 2) % n + 1
            assert multiply(arrow(n, i, j), arrow(n, j, i)) == multiply(arrow(n, i, h), arrow(n, h, i))


def test_tridegrees():
    n = 5
    assert tridegree(arrow(n, n, 1)) == TriDegree(1, 1, 1)
    assert tridegree(arrow(n, 1, n)) == TriDegree(0, 1, -1)
    assert tridegree(loop(n, 3)) == TriDegree(1, 0, 0)
    for i in range(1, n + 1):
        j = i % n + 1
        assert tridegree(arrow(n, i, j)) + tridegree(arrow(n, j, i)) == tridegree(loop(n, i))


def test_paths_between():
    assert [p for p, _ in paths_between(4, 1, 1)] == [idem(4, 1), loop(4, 1)]
    assert [p for p, _ in paths_between(4, 1, 2)] == [arrow(4, 1, 2)]
    assert paths_between(5, 1, 3) == []


@pytest.mark.parametrize("n", range(3, 9))
def test_associativity_and_degrees(n):
    B = basis(n)
    assert len(B) == 4 * n
    for x, y in itertools.product(B, B):
        xy = multiply(x, y)
        if xy is not None:
            assert tridegree(xy) == tridegree(x) + tridegree(y)
    for x, y, z in itertools.product(B, B, B):
        left = AlgebraElement.of(x) * AlgebraElement.of(y) * AlgebraElement.of(z)
        right = AlgebraElement.of(x) * (AlgebraElement.of(y) * AlgebraElement.of(z))
        assert left == right


@pytest.mark.parametrize("n", (3, 4, 6))
def test_unit_and_loop_nilpotence(n):
    one = sum((AlgebraElement.of(idem(n, i)) for i in range(1, n + 1)), AlgebraElement.zero(n))
    for b in basis(n):
        e = AlgebraElement.of(b)
        assert one * e == e and e * one == e
    for i in range(1, n + 1):
        assert multiply(loop(n, i), loop(n, i)) is None
