"""Operator ladders, finite Weyl characters, and graded projections."""

import random

import pytest

from demflag import (
    FormalCharacter,
    GradedClassicalCharacter,
    affinize,
    apply_word,
    check_w_invariance_per_grade,
    datum_from_label,
    demazure_step,
    demazure_word_char,
    errors,
    forget_grading,
    project_graded_classical,
    shift_grade,
    weyl_character_finite,
)

A1 = datum_from_label("A1")
A2 = datum_from_label("A2")
C2 = datum_from_label("C2")
G2 = datum_from_label("G2")
A1_AFF = affinize(A1)
A2_AFF = affinize(A2)


def mono(datum, h, d=0, c=1):
    return FormalCharacter.monomial(datum, datum.weight(h, d), c)


def _random_char(rng, ad, terms=4):
    out = FormalCharacter.zero(ad)
    for _ in range(terms):
        h = [rng.randint(-3, 3) for _ in ad.indices]
        out = out + mono(ad, h, rng.randint(-2, 2), rng.randint(-2, 3))
    return out


# ---- operator ladders ----


def test_step_ladder_cases():
    lam1 = A1_AFF.fundamental_weight(1)
    up = demazure_step(A1_AFF, 1, FormalCharacter.monomial(A1_AFF, lam1))
    assert up == mono(A1_AFF, [0, 1]) + mono(A1_AFF, [2, -1])

    flat = mono(A1_AFF, [3, 0])
    assert demazure_step(A1_AFF, 1, flat) == flat

    gone = mono(A1_AFF, [2, -1])
    assert demazure_step(A1_AFF, 1, gone) == FormalCharacter.zero(A1_AFF)

    # n <= -2 subtracts the interior ladder.
    neg = demazure_step(A1, 1, mono(A1, [-2]))
    assert neg == mono(A1, [0], c=-1)
    assert demazure_step(A1, 1, mono(A1, [-3])) \
        == mono(A1, [-1], c=-1) + mono(A1, [1], c=-1)


def test_step_idempotent():
    rng = random.Random(3)
    for ad in (A1_AFF, A2_AFF):
        for _ in range(30):
            f = _random_char(rng, ad)
            i = rng.choice(ad.indices)
            once = demazure_step(ad, i, f)
            assert demazure_step(ad, i, once) == once


def test_word_char_examples():
    lam0_delta = A1_AFF.weight([1, 0], 1)
    assert demazure_word_char(A1_AFF, (), lam0_delta) \
        == FormalCharacter.monomial(A1_AFF, lam0_delta)

    lam1 = A1_AFF.fundamental_weight(1)
    two = demazure_word_char(A1_AFF, (1,), lam1)
    assert two == mono(A1_AFF, [0, 1]) + mono(A1_AFF, [2, -1])

    four = demazure_word_char(A1_AFF, (1, 0), lam0_delta)
    expect = (mono(A1_AFF, [1, 0], 1) + mono(A1_AFF, [-1, 2], 0)
              + mono(A1_AFF, [1, 0], 0) + mono(A1_AFF, [3, -2], 0))
    assert four == expect


def test_word_char_extremal_coefficient_is_one():
    rng = random.Random(9)
    for _ in range(20):
        lam = A2_AFF.weight([rng.randint(0, 2) for _ in A2_AFF.indices], 0)
        if A2_AFF.level(lam) == 0:
            continue
        word = tuple(rng.choice(A2_AFF.indices) for _ in range(rng.randint(0, 4)))
        f = demazure_word_char(A2_AFF, word, lam)
        assert f.coefficient(lam) == 1
        assert f.coefficient(apply_word(A2_AFF, word, lam)) == 1


def test_word_char_braid_independence():
    seeds = [A2_AFF.fundamental_weight(0),
             A2_AFF.fundamental_weight(0) + A2_AFF.fundamental_weight(1),
             A2_AFF.weight([1, 1, 1], 0)]
    braids = [((0, 1, 0), (1, 0, 1)), ((1, 2, 1), (2, 1, 2)),
              ((0, 2, 0), (2, 0, 2))]
    for lam in seeds:
        for w1, w2 in braids:
            assert demazure_word_char(A2_AFF, w1, lam) \
                == demazure_word_char(A2_AFF, w2, lam)


# ---- finite Weyl characters ----


def weyl_dim(rd, lam):
    """Dimension by the product formula over positive coroots."""
    num, den = 1, 1
    rho = rd.rho
    up = lam + rho
    for beta in rd.positive_roots:
        co = rd.coroot(beta)
        num *= sum(c * v for c, v in zip(co, up.h))
        den *= sum(c * v for c, v in zip(co, rho.h))
    assert num % den == 0
    return num // den


def test_weyl_finite_examples():
    f = weyl_character_finite(A1, A1.weight([2]))
    assert f == mono(A1, [2]) + mono(A1, [0]) + mono(A1, [-2])
    assert weyl_character_finite(A2, A2.zero_weight) \
        == FormalCharacter.monomial(A2, A2.zero_weight)
    g = weyl_character_finite(A2, A2.weight([1, 0]))
    assert len(g) == 3 and all(c == 1 for _, c in g.terms())


def test_weyl_finite_rejects_nondominant():
    with pytest.raises(errors.NotDominant):
        weyl_character_finite(A1, A1.weight([-1]))


def test_weyl_finite_known_dimensions():
    table = [(A2, (1, 1), 8), (C2, (1, 0), 4), (C2, (0, 1), 5),
             (C2, (2, 0), 10), (C2, (1, 1), 16),
             (G2, (1, 0), 7), (G2, (0, 1), 14)]
    for rd, h, dim in table:
        assert weyl_character_finite(rd, rd.weight(h)).mass() == dim


def test_weyl_finite_matches_dimension_formula():
    cases = [(A1, (m,)) for m in range(5)]
    cases += [(A2, h) for h in ((1, 0), (2, 0), (1, 1), (2, 1), (2, 2))]
    cases += [(C2, h) for h in ((1, 0), (0, 1), (1, 1), (2, 1))]
    cases += [(G2, h) for h in ((1, 0), (0, 1), (1, 1))]
    for rd, h in cases:
        lam = rd.weight(h)
        f = weyl_character_finite(rd, lam)
        assert f.mass() == weyl_dim(rd, lam), (rd.label, h)
        assert f.coefficient(lam) == 1
        assert f.coefficient(apply_word(rd, rd.w0_word, lam)) == 1


def test_weyl_finite_is_w_invariant():
    for rd, h in ((A2, (2, 1)), (C2, (1, 1)), (G2, (1, 0))):
        f = weyl_character_finite(rd, rd.weight(h))
        g = GradedClassicalCharacter(
            rd, {(w.h, 0): c for w, c in f.terms()})
        assert check_w_invariance_per_grade(rd, g)


# ---- graded projections ----


def test_project_examples():
    lam0_delta = A1_AFF.weight([1, 0], 1)
    g = project_graded_classical(
        A1_AFF, FormalCharacter.monomial(A1_AFF, lam0_delta))
    assert g.terms() == [(((0,), 1), 1)]

    four = demazure_word_char(A1_AFF, (1, 0), lam0_delta)
    g = project_graded_classical(A1_AFF, four)
    assert dict(g.terms()) == {((2,), 0): 1, ((0,), 0): 1,
                               ((-2,), 0): 1, ((0,), 1): 1}


def test_project_sums_collisions():
    f = mono(A1_AFF, [1, 0]) + mono(A1_AFF, [0, 0])
    g = project_graded_classical(A1_AFF, f)
    assert g.terms() == [(((0,), 0), 2)]


def test_project_preserves_mass():
    rng = random.Random(17)
    for _ in range(20):
        f = _random_char(rng, A2_AFF, terms=6)
        assert project_graded_classical(A2_AFF, f).mass() == f.mass()


def test_project_rejects_wrong_datum():
    with pytest.raises(ValueError):
        project_graded_classical(A2_AFF, mono(A1_AFF, [1, 0]))


def test_forget_and_shift():
    g = GradedClassicalCharacter(A1, {((2,), 0): 1, ((0,), 0): 1,
                                      ((-2,), 0): 1, ((0,), 1): 1})
    flat = forget_grading(g)
    assert flat == mono(A1, [2]) + mono(A1, [0], c=2) + mono(A1, [-2])
    assert shift_grade(g, 0) == g
    assert shift_grade(shift_grade(g, 5), -5) == g
    assert shift_grade(g, 2).grades() == [2, 3]
    assert g.coefficient(A1.weight([0]), 1) == 1
    assert g.grade_slice(0) == {(2,): 1, (0,): 1, (-2,): 1}


def test_invariance_checker():
    ok = GradedClassicalCharacter(A1, {((2,), 0): 1, ((0,), 0): 1,
                                       ((-2,), 0): 1, ((0,), 1): 1})
    assert check_w_invariance_per_grade(A1, ok)
    bad = GradedClassicalCharacter(A1, {((1,), 0): 1})
    assert not check_w_invariance_per_grade(A1, bad)
    assert check_w_invariance_per_grade(A1, GradedClassicalCharacter.zero(A1))


# ---- character algebra ----


def test_character_algebra():
    om = mono(A1, [1]) + mono(A1, [-1])
    square = om * om
    assert square == mono(A1, [2]) + mono(A1, [0], c=2) + mono(A1, [-2])
    assert square.mass() == 4
    assert (om - om) == FormalCharacter.zero(A1)
    assert len(om - om) == 0
    assert mono(A1, [1], c=0) == FormalCharacter.zero(A1)
    assert om.scale(3).mass() == 6
    assert (-om).coefficient(A1.weight([1])) == -1


def test_mixed_datum_refused():
    with pytest.raises(ValueError):
        mono(A1, [1]) + mono(A2, [1, 0])
    with pytest.raises(ValueError):
        mono(A1, [1]) * mono(A1_AFF, [0, 1])
    g1 = GradedClassicalCharacter(A1, {((1,), 0): 1})
    g2 = GradedClassicalCharacter(A2, {((1, 0), 0): 1})
    with pytest.raises(ValueError):
        g1 + g2
