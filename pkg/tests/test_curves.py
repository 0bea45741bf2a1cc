from __future__ import annotations

import random
from fractions import Fraction

import pytest

from affzz.braid import BraidWord, all_words, generators, random_words, relators, rho, sigma
from affzz.complexes import apply_word, equivalent, hom_poincare, minimize, projective
from affzz.curves import (
    CurveError,
    TrigradedCurve,
    basic_curve,
    chi_shift,
    curve_complex,
    geometric_intersection_with_basic,
    index_monomial,
    k_strings,
    trigraded_intersection_with_basic,
    twist,
    twist_word_action,
)
from affzz.laurent import Q3, LaurentPoly, parse

NS = (3, 4, 5, 6)
MOVING = ("I", "II", "II'", "III", "III'")


def q(text):
    return parse(text, Q3)


def corpus(n, seed=0):
    curves = [basic_curve(n, l) for l in range(1, n + 1)]
    curves += [twist_word_action(w, basic_curve(n, 1 + i % n)) for i, w in enumerate(random_words(n, 12, 6, seed))]
    return curves


def test_basic_curve_shape():
    b = basic_curve(4, 1)
    assert (b.start, b.end) == (1, 2)
    assert [(c.barrier, c.mu) for c in b.crossings] == [(1, (0, 0, 0))]


@pytest.mark.parametrize("n", NS)
def test_basic_curve_examples(n):
    for k in range(1, n + 1):
        b = basic_curve(n, k)
        assert curve_complex(b).canonical() == projective(n, k).canonical()
        assert trigraded_intersection_with_basic(k, b) == q("1 + q2")
        assert twist(sigma(k), b) == chi_shift(b, (-1, 1, 0))
        if k < n:
            assert trigraded_intersection_with_basic(k + 1, b) == q("1")
            assert twist(rho(), b) == basic_curve(n, k + 1)
    assert trigraded_intersection_with_basic(1, basic_curve(n, n)) == q("q3^-1")


def test_chi_shift_zero():
    c = twist_word_action(random_words(4, 1, 5, seed=3)[0], basic_curve(4, 2))
    assert chi_shift(c, (0, 0, 0)) == c


@pytest.mark.parametrize("n", NS)
def test_twist_relations_on_normal_forms(n):
    for lhs, rhs in relators(n):
        for c in corpus(n):
            assert twist_word_action(lhs, c) == twist_word_action(rhs, c), (str(lhs), str(rhs))


@pytest.mark.parametrize("n", NS)
def test_twist_then_inverse(n):
    for g in generators(n):
        for c in corpus(n):
            assert twist(g.inverse(), twist(g, c)) == c


@pytest.mark.parametrize("n", NS)
def test_central_rotation_shifts(n):
    rn = BraidWord(n, (rho(),) * n)
    for c in corpus(n):
        assert twist_word_action(rn, c) == chi_shift(c, (-n, n, 1))


@pytest.mark.parametrize("n", NS)
def test_indices_obey_segment_rules(n):
    for c in corpus(n, seed=7):
        c.check()


def test_malformed_curves_rejected():
    with pytest.raises(CurveError):
        TrigradedCurve(4, 1, 1, (("D", 1, 1),), ((0, 0, 0),))
    with pytest.raises(CurveError):
        TrigradedCurve(4, 1, 2, (("D", 1, 1),), ())


def test_strings_of_basic_curves():
    n = 5
    [s] = k_strings(basic_curve(n, 2), 2)
    assert (s.family, s.u, s.base) == ("VI", 0, (0, 0, 0))
    assert k_strings(basic_curve(n, 4), 1) == []
    assert trigraded_intersection_with_basic(1, basic_curve(n, 3)).is_zero()


@pytest.mark.parametrize("n", NS)
def test_twist_increments_winding(n):
    for k in range(1, n + 1):
        for c in corpus(n, seed=k):
            before = sorted((s.family, s.u) for s in k_strings(c, k) if s.family in MOVING)
            after = sorted((s.family, s.u) for s in k_strings(twist(sigma(k), c), k) if s.family in MOVING)
            assert after == sorted((f, u + 1) for f, u in before)


@pytest.mark.parametrize("n", NS)
def test_geometric_basic_pairs(n):
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            g = geometric_intersection_with_basic(k, basic_curve(n, l))
            d = min((k - l) % n, (l - k) % n)
            expected = Fraction(1) if d == 0 else Fraction(1, 2) if d == 1 else Fraction(0)
            assert g == expected


@pytest.mark.parametrize("n", NS)
def test_specialisation_to_geometric(n):
    for c in corpus(n):
        for k in range(1, n + 1):
            assert 2 * geometric_intersection_with_basic(k, c) == trigraded_intersection_with_basic(k, c).at_one()


@pytest.mark.parametrize("n", NS)
def test_chi_equivariance(n):
    rng = random.Random(n)
    for c in corpus(n):
        r = tuple(rng.randint(-3, 3) for _ in range(3))
        for k in range(1, n + 1):
            assert trigraded_intersection_with_basic(k, chi_shift(c, r)) == index_monomial(n, r) * trigraded_intersection_with_basic(k, c)
        shifted = curve_complex(c).shift(r[0] + n * r[2], r[1] - n * r[2], -r[2])
        assert curve_complex(chi_shift(c, r)).canonical() == shifted.canonical()


@pytest.mark.parametrize("n", NS)
def test_duality_on_basic_pairs(n):
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            a = trigraded_intersection_with_basic(k, basic_curve(n, l))
            b = trigraded_intersection_with_basic(l, basic_curve(n, k))
            dual = LaurentPoly(Q3, {(-e1, 1 - e2, -e3): c for (e1, e2, e3), c in a.terms.items()})
            assert dual == b


@pytest.mark.parametrize("n", NS)
def test_adjacent_twist_matches_hom(n):
    for k in range(1, n):
        c = twist(sigma(k), basic_curve(n, k + 1))
        C = minimize(apply_word(BraidWord(n, (sigma(k),)), projective(n, k + 1)))
        assert trigraded_intersection_with_basic(k, c) == hom_poincare(k, C)


@pytest.mark.parametrize("n", NS)
def test_complex_bridge(n):
    words = list(all_words(n, 2)) + random_words(n, 10, 6, seed=2)
    for w in words:
        for l in range(1, n + 1):
            L = minimize(curve_complex(twist_word_action(w, basic_curve(n, l))))
            assert equivalent(L, minimize(apply_word(w, projective(n, l)))), (str(w), l)


@pytest.mark.parametrize("n", (3, 4))
def test_dual_pipeline_short_words(n):
    for w in all_words(n, 2):
        for l in range(1, n + 1):
            c = twist_word_action(w, basic_curve(n, l))
            C = minimize(apply_word(w, projective(n, l)))
            for k in range(1, n + 1):
                assert trigraded_intersection_with_basic(k, c) == hom_poincare(k, C)


def test_json_dump():
    d = basic_curve(4, 2).to_json()
    assert d["endpoints"] == [2, 3]
    assert d["path"][1] == {"crossing": 2, "mu": [0, 0, 0]}
    assert d["path"][0]["type"] in ("3", "3'") and d["path"][-1]["type"] in ("3", "3'")
