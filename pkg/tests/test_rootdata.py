"""Root data, Weyl elements, and the parsing helpers."""

from fractions import Fraction

import pytest

from kmcrystals.rootdata import (
    NotDominantIntegral,
    NotGCM,
    NotSymmetrizable,
    PairingInconsistent,
    WordNotReduced,
    _in_parabolic_by_stripping,
    bruhat_leq,
    check_reduced,
    datum_from_json,
    gauss_solve,
    in_parabolic,
    min_coset_rep,
    parse_rational,
    parse_weight,
    parse_word,
    preset,
    rational_str,
    stabilizer_letters,
    validate_root_datum,
    vec,
    weight_str,
    weyl_group_elements,
    word_str,
)

A2 = preset("A2")
A3 = preset("A3")
GL3 = preset("GL3")


def _g2():
    # simply-connected realization in fundamental-weight coordinates:
    # alpha_j is column j of the Cartan matrix, alpha_i^vee the i-th coordinate
    cartan = [[2, -1], [-3, 2]]
    return validate_root_datum("G2", 2, 2, cartan,
                               roots=[(2, -3), (-1, 2)],
                               pairing=[(1, 0), (0, 1)],
                               fundamentals=[(1, 0), (0, 1)])


# -- linear algebra helpers ---------------------------------------------------


def test_gauss_solve():
    assert gauss_solve([[2, 1], [1, 1]], (3, 2)) == (1, 1)
    assert gauss_solve([[1, 1], [2, 2]], (1, 3)) is None
    x = gauss_solve([[2, 0], [0, 3]], (1, 1))
    assert x == (Fraction(1, 2), Fraction(1, 3))


def test_rational_round_trip():
    for text in ("0", "5", "-3", "2/3", "-7/2"):
        assert rational_str(parse_rational(text)) == text
    assert parse_rational(Fraction(4, 6)) == Fraction(2, 3)


# -- datum validation ---------------------------------------------------------


def test_g2_symmetrizer():
    d = _g2()
    # d_1 a_12 = d_2 a_21 with the normalization d_1 = 1 forces d_2 = 1/3
    assert d.sym == (Fraction(1), Fraction(1, 3))
    for i in range(2):
        for j in range(2):
            assert d.sym[i] * d.cartan[i][j] == d.sym[j] * d.cartan[j][i]


def test_preset_shapes():
    assert (A2.n, A2.m) == (2, 2)
    assert A2.sym == (Fraction(1), Fraction(1))
    assert (GL3.n, GL3.m) == (2, 3)
    assert GL3.fundamental_weight(1) == vec((1, 0, 0))
    assert GL3.fundamental_weight(2) == vec((1, 1, 0))
    assert GL3.pair(vec((1, 0, 0)), 1) == 1
    assert GL3.pair(vec((1, 0, 0)), 2) == 0


def test_not_gcm():
    with pytest.raises(NotGCM):
        validate_root_datum("bad", 2, 2, [[1, -1], [-1, 2]],
                            roots=[(1, -1), (-1, 2)], pairing=[(1, 0), (0, 1)])
    with pytest.raises(NotGCM):
        validate_root_datum("bad", 2, 2, [[2, 1], [-1, 2]],
                            roots=[(2, 1), (-1, 2)], pairing=[(1, 0), (0, 1)])
    with pytest.raises(NotGCM):  # zero pattern must be symmetric
        validate_root_datum("bad", 2, 2, [[2, 0], [-1, 2]],
                            roots=[(2, 0), (-1, 2)], pairing=[(1, 0), (0, 1)])


def test_not_symmetrizable():
    # the ratio product around the 3-cycle is -1 * -1 * -2 vs -1 * -1 * -1
    cartan = [[2, -1, -1], [-1, 2, -1], [-2, -1, 2]]
    cols = [tuple(cartan[i][j] for i in range(3)) for j in range(3)]
    eye = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    with pytest.raises(NotSymmetrizable):
        validate_root_datum("bad", 3, 3, cartan, roots=cols, pairing=eye)


def test_pairing_inconsistent():
    with pytest.raises(PairingInconsistent):
        validate_root_datum("bad", 2, 2, [[2, -1], [-1, 2]],
                            roots=[(2, -1), (-1, 2)], pairing=[(1, 0), (1, 1)])


def test_datum_json_round_trip():
    d = datum_from_json(A3.to_json())
    assert (d.n, d.m, d.cartan) == (A3.n, A3.m, A3.cartan)
    assert d.roots == A3.roots and d.pairing == A3.pairing


# -- weights ------------------------------------------------------------------


def test_reflect_weight():
    w1 = A2.fundamental_weight(1)
    assert A2.reflect_weight(1, w1) == vec((-1, 1))
    assert A2.reflect_weight(2, w1) == w1
    lam = vec((2, 3))
    assert A2.reflect_weight(1, A2.reflect_weight(1, lam)) == lam


def test_reflect_preserves_integrality():
    lams = [vec((a, b, c)) for a in (-2, 0, 1) for b in (-1, 2) for c in (0, 3)]
    for lam in lams:
        for i in (1, 2, 3):
            assert A3.is_integral(A3.reflect_weight(i, lam))


def test_dominant_integral_gate():
    A2.check_dominant_integral(vec((1, 1)))
    with pytest.raises(NotDominantIntegral):
        A2.check_dominant_integral(vec((-1, 0)))
    with pytest.raises(NotDominantIntegral):
        A2.check_dominant_integral(vec((Fraction(1, 2), 0)))


def test_root_coords_and_weight_drop():
    lam = vec((1, 1))
    mu = tuple(x - 1 * a - 2 * b for x, a, b in
               zip(lam, A2.simple_root(1), A2.simple_root(2)))
    assert A2.root_coords(vec(tuple(a - b for a, b in zip(lam, mu)))) == (1, 2)
    assert A2.weight_drop(lam, mu) == 3
    with pytest.raises(ValueError):  # omega_1 is a fractional root combination
        A2.weight_drop(lam, vec((0, 1)))
    with pytest.raises(ValueError):  # e_1 is outside the GL root span
        GL3.weight_drop(vec((1, 1, 0)), vec((0, 1, 0)))


def test_positive_roots():
    assert len(A2.positive_roots) == 3
    assert len(A3.positive_roots) == 6
    assert len(_g2().positive_roots) == 6


# -- Weyl elements ------------------------------------------------------------


def test_word_basics():
    w = A3.weyl((2, 1, 3, 2))
    assert w.length == 4
    assert w.rword == (2, 3, 1, 2)  # canonical form commutes s1 past s3
    assert A3.weyl(w.rword) == w
    assert (w * w.inverse()).is_identity
    assert A2.weyl(()).is_identity


def test_braid_relations():
    assert A2.weyl((1, 2, 1)) == A2.weyl((2, 1, 2))
    assert A3.weyl((1, 3)) == A3.weyl((3, 1))
    g2 = _g2()
    assert g2.weyl((1, 2, 1, 2, 1, 2)) == g2.weyl((2, 1, 2, 1, 2, 1))


def test_act_weight_and_root():
    s1 = A2.simple(1)
    assert s1.act_weight(vec((1, 0))) == vec((-1, 1))
    assert s1.act_root((Fraction(0), Fraction(1))) == (1, 1)  # s1(a2) = a1 + a2
    w = A2.weyl((1, 2))
    # fold of single reflections, applied right factor first
    mu = vec((2, -1))
    assert w.act_weight(mu) == A2.reflect_weight(1, A2.reflect_weight(2, mu))


def test_descents():
    w = A2.weyl((1, 2))
    assert w.right_descent(2) and not w.right_descent(1)
    assert w.left_descent(1) and not w.left_descent(2)
    assert w.support() == frozenset({1, 2})


def test_check_reduced():
    assert check_reduced(A2, (1, 2, 1)).length == 3
    with pytest.raises(WordNotReduced):
        check_reduced(A2, (1, 1))
    with pytest.raises(WordNotReduced):
        check_reduced(A2, (1, 2, 1, 2))


def test_weyl_group_enumeration():
    wa2 = weyl_group_elements(A2)
    assert len(wa2) == 6
    assert sorted(w.length for w in wa2) == [0, 1, 1, 2, 2, 3]
    assert wa2[-1] == A2.weyl((1, 2, 1))  # longest element last
    assert len(weyl_group_elements(A3)) == 24
    with pytest.raises(ValueError):
        weyl_group_elements(A3, cap=10)


def test_bruhat_against_subwords():
    # u <= w iff some subsequence of a reduced word of w multiplies to u
    for datum in (A2, A3):
        group = weyl_group_elements(datum)
        for w in group:
            below = set()
            word = w.rword
            for mask in range(1 << len(word)):
                sub = tuple(word[j] for j in range(len(word)) if mask >> j & 1)
                below.add(datum.weyl(sub))
            for u in group:
                assert bruhat_leq(u, w) == (u in below), (u, w)


def test_parabolic_membership():
    subsets = [frozenset(s) for s in
               [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]]
    for w in weyl_group_elements(A3):
        for letters in subsets:
            assert in_parabolic(w, letters) == _in_parabolic_by_stripping(w, letters)


def test_stabilizer_and_coset_rep():
    om2 = A3.fundamental_weight(2)
    assert stabilizer_letters(A3, om2) == frozenset({1, 3})
    assert min_coset_rep(A3.simple(1), om2).is_identity
    assert min_coset_rep(A3.weyl((2, 1)), om2) == A3.simple(2)
    # brute force: the minimum-length element with the same image of om2
    for w in weyl_group_elements(A3):
        rep = min_coset_rep(w, om2)
        assert rep.act_weight(om2) == w.act_weight(om2)
        fiber = [u for u in weyl_group_elements(A3)
                 if u.act_weight(om2) == w.act_weight(om2)]
        assert rep.length == min(u.length for u in fiber)


# -- parsing ------------------------------------------------------------------


def test_parse_weight():
    assert parse_weight(A2, "ω1") == vec((1, 0))
    assert parse_weight(A2, "omega1+omega2") == vec((1, 1))
    assert parse_weight(A3, "2w1-w3") == vec((2, 0, -1))
    assert parse_weight(A2, "0") == vec((0, 0))
    assert parse_weight(A2, "1,1") == vec((1, 1))
    assert parse_weight(GL3, "1,1,0") == vec((1, 1, 0))
    with pytest.raises(ValueError):
        parse_weight(A2, "ω3")
    with pytest.raises(ValueError):
        parse_weight(A2, "bogus")


def test_parse_word_and_strs():
    assert parse_word("2,1,3,2") == (2, 1, 3, 2)
    assert parse_word("") == ()
    assert parse_word("e") == ()
    assert parse_word("id") == ()
    assert word_str(()) == "e"
    assert word_str((2, 1)) == "s2 s1"
    assert weight_str(vec((0, 1, 0))) == "(0,1,0)"
    with pytest.raises(ValueError):
        parse_word("1,x")
