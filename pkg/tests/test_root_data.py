"""Tables, reflections, chamber reduction, and the short-root subsystem."""

import random

import pytest

from demflag import (
    affinize,
    apply_word,
    build_finite_datum,
    datum_from_label,
    dominance_leq,
    errors,
    eta_lambda,
    make_dominant,
    reflect_weight,
    short_subdatum,
)

A1 = datum_from_label("A1")
A2 = datum_from_label("A2")
C2 = datum_from_label("C2")
G2 = datum_from_label("G2")

ALL_RANKS = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (4, 8),
             "E": (6, 8), "F": (4, 4), "G": (2, 2)}


def all_datums():
    for series, (lo, hi) in ALL_RANKS.items():
        for n in range(lo, hi + 1):
            yield build_finite_datum(series, n)


# ---- finite tables ----


def test_cartan_matrices():
    # cartan[i][j] = alpha_j(h_i): long roots pair to -2/-3 on short coroots.
    assert A1.cartan == ((2,),)
    assert A2.cartan == ((2, -1), (-1, 2))
    assert C2.cartan == ((2, -2), (-1, 2))
    assert G2.cartan == ((2, -3), (-1, 2))
    b3 = datum_from_label("B3")
    assert b3.cartan == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    f4 = datum_from_label("F4")
    assert f4.cartan == ((2, -1, 0, 0), (-1, 2, -1, 0),
                         (0, -2, 2, -1), (0, 0, -1, 2))


def test_e_series_edges():
    # Chain 1-3-4-..-n with node 2 attached to node 4.
    for n in (6, 7, 8):
        rd = build_finite_datum("E", n)
        edges = {(i, j) for i in rd.indices for j in rd.indices
                 if i < j and rd.cartan[rd.pos(i)][rd.pos(j)] != 0}
        chain = {(1, 3)} | {(k, k + 1) for k in range(3, n)}
        assert edges == chain | {(2, 4)}


def test_positive_root_counts():
    expected = {"A1": 1, "A2": 3, "A3": 6, "B3": 9, "C2": 4, "C3": 9,
                "D4": 12, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
    for label, count in expected.items():
        assert len(datum_from_label(label).positive_roots) == count


def test_symmetrizers():
    assert A2.symmetrizer == (1, 1)
    assert C2.symmetrizer == (1, 2)
    assert G2.symmetrizer == (1, 3)
    assert datum_from_label("B3").symmetrizer == (2, 2, 1)
    assert datum_from_label("C3").symmetrizer == (1, 1, 2)
    assert datum_from_label("F4").symmetrizer == (2, 2, 1, 1)


def test_short_nodes_and_lacing():
    assert A2.short_nodes == () and A2.lacing == 1
    assert C2.short_nodes == (1,) and C2.lacing == 2
    assert G2.short_nodes == (1,) and G2.lacing == 3
    assert datum_from_label("B3").short_nodes == (3,)
    assert datum_from_label("C3").short_nodes == (1, 2)
    assert datum_from_label("F4").short_nodes == (3, 4)
    assert C2.root_lacing(1) == 2 and C2.root_lacing(2) == 1
    assert G2.root_lacing(1) == 3 and G2.root_lacing(2) == 1


def test_highest_root_tables():
    assert A2.theta_coords == (1, 1) and A2.theta_h == (1, 1)
    assert C2.theta_coords == (2, 1) and C2.theta_h == (2, 0)
    assert G2.theta_coords == (3, 2) and G2.theta_h == (0, 1)
    b3 = datum_from_label("B3")
    assert b3.theta_coords == (1, 2, 2) and b3.theta_h == (0, 1, 0)
    assert C2.comarks == (1, 1)
    assert G2.comarks == (1, 2)
    assert b3.comarks == (1, 2, 1)
    assert datum_from_label("F4").comarks == (2, 3, 2, 1)


def test_coxeter_numbers_all_types():
    """1 + mark sum and 1 + comark sum against the classical tables."""
    cox = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n,
           "D": lambda n: 2 * n - 2,
           "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
           "F": lambda n: 12, "G": lambda n: 6}
    dual = {"A": lambda n: n + 1, "B": lambda n: 2 * n - 1,
            "C": lambda n: n + 1, "D": lambda n: 2 * n - 2,
            "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
            "F": lambda n: 9, "G": lambda n: 4}
    for rd in all_datums():
        assert 1 + sum(rd.marks) == cox[rd.series](rd.rank), rd.label
        assert 1 + sum(rd.comarks) == dual[rd.series](rd.rank), rd.label


def test_longest_element_word():
    for rd in all_datums():
        assert len(rd.w0_word) == len(rd.positive_roots), rd.label
        assert apply_word(rd, rd.w0_word, rd.rho) == -rd.rho, rd.label


def test_w0_is_an_involution():
    rng = random.Random(7)
    for rd in (A2, C2):
        for _ in range(20):
            mu = rd.weight([rng.randint(-4, 4) for _ in rd.indices])
            assert apply_word(rd, rd.w0_word * 2, mu) == mu


def test_coroot_of_theta_is_comarks():
    for label in ("A2", "C2", "G2", "B3", "F4", "D4", "E6"):
        rd = datum_from_label(label)
        assert rd.coroot(rd.theta_coords) == rd.comarks


def test_coroot_of_simple_roots():
    for rd in (A2, C2, G2):
        for i in rd.indices:
            coords = tuple(1 if j == i else 0 for j in rd.indices)
            expect = tuple(1 if j == i else 0 for j in rd.indices)
            assert rd.coroot(coords) == expect


def test_pairing_with_theta_coroot():
    assert A2.pair_coroot(A2.rho, A2.theta_coords) == 2
    assert C2.pair_coroot(C2.weight([2, 0]), C2.theta_coords) == 2
    assert G2.pair_coroot(G2.weight([0, 1]), G2.theta_coords) == 2


def test_unknown_type_rejected():
    for bad in ("H3", "A0", "A9", "F5", "G3", "D3", "a2", "X1", ""):
        with pytest.raises(errors.UnknownType):
            datum_from_label(bad)


def test_index_bounds():
    with pytest.raises(errors.IndexOutOfRange):
        A2.pos(0)
    with pytest.raises(errors.IndexOutOfRange):
        A2.pos(3)
    ad = affinize(A2)
    with pytest.raises(errors.IndexOutOfRange):
        ad.pos(-1)
    with pytest.raises(errors.IndexOutOfRange):
        ad.pos(3)


def test_weight_arity_checked():
    with pytest.raises(ValueError):
        A2.weight([1])
    with pytest.raises(ValueError):
        affinize(A1).weight([1])
    with pytest.raises(ValueError):
        A2.weight([1, 0]) + A1.weight([1])


# ---- affinization ----


def test_affine_cartan_a1():
    ad = affinize(A1)
    assert ad.cartan == ((2, -2), (-2, 2))
    assert ad.label == "A1~"
    assert ad.dual_marks == (1, 1) and ad.marks == (1, 1)


def test_affine_cartan_a2():
    ad = affinize(A2)
    assert ad.cartan[0] == (2, -1, -1)
    assert ad.cartan[1][0] == -1 and ad.cartan[2][0] == -1


def test_simple_roots_have_level_zero():
    for rd in (A1, A2, C2, G2):
        ad = affinize(rd)
        for i in ad.indices:
            assert ad.level(ad.simple_root(i)) == 0
        assert ad.level(ad.delta) == 0
        assert ad.level(ad.fundamental_weight(0)) == 1


def test_embed_classical_level_zero():
    ad = affinize(C2)
    for i in C2.indices:
        w = ad.embed_classical(C2.fundamental_weight(i))
        assert ad.level(w) == 0
        assert ad.classical_part(w) == C2.fundamental_weight(i)


# ---- reflections and words ----


def test_reflection_examples():
    ad = affinize(A1)
    assert reflect_weight(ad, 1, ad.weight([2, -1])) == ad.weight([0, 1])
    lam0_delta = ad.weight([1, 0], 1)
    assert reflect_weight(ad, 0, lam0_delta) == ad.weight([-1, 2], 0)
    fixed = ad.weight([3, 0])
    assert reflect_weight(ad, 1, fixed) == fixed


def test_reflection_is_an_involution():
    rng = random.Random(11)
    ad = affinize(A2)
    for _ in range(30):
        mu = ad.weight([rng.randint(-3, 3) for _ in ad.indices],
                       rng.randint(-2, 2))
        i = rng.choice(ad.indices)
        assert reflect_weight(ad, i, reflect_weight(ad, i, mu)) == mu
        assert ad.level(reflect_weight(ad, i, mu)) == ad.level(mu)


def test_apply_word_examples():
    ad = affinize(A1)
    lam0_delta = ad.weight([1, 0], 1)
    assert apply_word(ad, (), lam0_delta) == lam0_delta
    # Last letter acts first: s_1(s_0(Lambda_0 + delta)).
    assert apply_word(ad, (1, 0), lam0_delta) == ad.weight([3, -2], 0)
    word = (0, 1, 0)
    assert apply_word(ad, word + tuple(reversed(word)), lam0_delta) \
        == lam0_delta


def test_make_dominant_examples():
    ad = affinize(A1)
    lam, word = make_dominant(ad, ad.weight([2, -1]))
    assert lam == ad.fundamental_weight(1) and word == (1,)
    # Letters come in application order, so apply_word recovers the input.
    mu = ad.weight([3, -2], 0)
    lam, word = make_dominant(ad, mu)
    assert lam == ad.weight([1, 0], 1)
    assert word == (1, 0)
    assert apply_word(ad, word, lam) == mu
    dom = ad.weight([2, 1], 0)
    assert make_dominant(ad, dom) == (dom, ())


def _random_level_weight(rng, ad, level):
    tail = [rng.randint(-4, 4) for _ in range(ad.rank)]
    h0 = level - sum(a * v for a, v in zip(ad.finite.comarks, tail))
    return ad.weight([h0] + tail, rng.randint(-2, 2))


def test_make_dominant_word_length_tie_break_independent():
    rng = random.Random(23)
    for rd in (A1, A2):
        ad = affinize(rd)
        for _ in range(50):
            mu = _random_level_weight(rng, ad, rng.randint(1, 3))
            lam_min, w_min = make_dominant(ad, mu)
            lam_max, w_max = make_dominant(ad, mu, tie_break="max")
            assert lam_min == lam_max
            assert len(w_min) == len(w_max)
            assert apply_word(ad, w_min, lam_min) == mu
            assert apply_word(ad, w_max, lam_max) == mu


def test_make_dominant_word_is_reduced_witness():
    """Applying the word to a regular dominant weight never repeats."""
    rng = random.Random(5)
    ad = affinize(A2)
    reg = ad.weight([1] * (ad.rank + 1), 0)
    for _ in range(20):
        mu = _random_level_weight(rng, ad, rng.randint(1, 3))
        _, word = make_dominant(ad, mu)
        seen = {reg}
        cur = reg
        for i in reversed(word):
            cur = reflect_weight(ad, i, cur)
            assert cur not in seen
            seen.add(cur)


def test_make_dominant_rejects_nonpositive_level():
    ad = affinize(A1)
    with pytest.raises(errors.ZeroLevel):
        make_dominant(ad, ad.weight([1, -1]))
    with pytest.raises(errors.ZeroLevel):
        make_dominant(ad, ad.weight([-2, 1]))


# ---- dominance order ----


def test_dominance_examples():
    zero = A2.zero_weight
    assert dominance_leq(A2, zero, A2.weight([1, 1]))
    assert dominance_leq(A2, A2.weight([1, 1]), A2.weight([1, 1]))
    assert not dominance_leq(A2, A2.weight([1, 0]), A2.weight([0, 1]))
    assert not dominance_leq(A2, A2.weight([1, 1]), zero)


def test_dominance_affine():
    ad = affinize(A1)
    lam0 = ad.fundamental_weight(0)
    # delta = alpha_0 + alpha_1 here.
    assert dominance_leq(ad, lam0, lam0 + ad.delta)
    assert not dominance_leq(ad, lam0 + ad.delta, lam0)
    below = apply_word(ad, (0,), lam0 + ad.delta)
    assert dominance_leq(ad, below, lam0 + ad.delta)


# ---- short-root subsystem ----


def test_short_subdatum_tables():
    assert short_subdatum(C2).nodes == (1,)
    assert short_subdatum(G2).nodes == (1,)
    assert short_subdatum(datum_from_label("B3")).nodes == (3,)
    se = short_subdatum(datum_from_label("C3"))
    assert se.nodes == (1, 2) and se.subdatum.label == "A2"
    se = short_subdatum(datum_from_label("F4"))
    assert se.nodes == (3, 4) and se.subdatum.label == "A2"
    with pytest.raises(errors.SimplyLaced):
        short_subdatum(A2)


def test_short_restrict():
    se = short_subdatum(C2)
    assert se.restrict(C2.weight([2, 0])) == se.subdatum.weight([2])
    assert se.restrict(C2.weight([0, 1])) == se.subdatum.weight([0])


def test_short_section_restricts_back():
    for label in ("C2", "B3", "F4", "C4"):
        se = short_subdatum(datum_from_label(label))
        for i in se.subdatum.indices:
            mu = se.subdatum.fundamental_weight(i)
            sec = se.section(mu)
            back = tuple(sec[se.parent.pos(k)] for k in se.nodes)
            assert back == mu.h, (label, i)


def test_eta_lambda_examples():
    se = short_subdatum(C2)
    lam = C2.weight([2, 0])
    assert eta_lambda(se, lam, se.restrict(lam)) == lam
    assert eta_lambda(se, lam, se.subdatum.zero_weight) == C2.weight([0, 1])
    long_only = C2.weight([0, 2])
    assert eta_lambda(se, long_only, se.subdatum.zero_weight) == long_only


def test_eta_lambda_dominant_and_compatible():
    se = short_subdatum(C2)
    sub = se.subdatum
    for lam_h in ((1, 0), (2, 0), (1, 1), (3, 1), (2, 2)):
        lam = C2.weight(lam_h)
        bar = se.restrict(lam)
        for k in range(bar.h[0] + 1):
            mu = sub.weight([k])
            if not dominance_leq(sub, mu, bar):
                continue
            out = eta_lambda(se, lam, mu)
            assert C2.is_dominant(out), (lam_h, k)
            assert se.restrict(out) == mu


def test_eta_lambda_not_below():
    se = short_subdatum(C2)
    with pytest.raises(errors.NotBelow):
        eta_lambda(se, C2.zero_weight, se.subdatum.weight([1]))
    with pytest.raises(errors.NotBelow):
        eta_lambda(se, C2.weight([1, 0]), se.subdatum.weight([3]))
