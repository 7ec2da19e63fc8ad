import random

import pytest

from tqc.dotted import (
    A,
    DottedTessellation,
    KMoveError,
    P,
    QPermutation,
    T,
    apply_A,
    apply_kword,
    apply_P,
    apply_T,
    apply_T_inv,
    dotted_equal,
    format_kword,
    invert_kword,
    parse_kword,
    standard_dotted,
)
from tqc.exactnum import INF, ONE, ZERO, parse_rational as Q
from tqc.suites import check_k_relations, random_dotted
from tqc.tessellation import flip, triangle

STD = standard_dotted()
T1 = triangle(ZERO, ONE, INF)
TM1 = triangle(ZERO, Q("-1"), INF)


def test_standard_labels_and_dots():
    assert STD.label(T1) == ONE
    assert STD.label(TM1) == Q("-1")
    assert STD.dot(triangle(ZERO, Q("1/2"), ONE)) == Q("1/2")
    assert STD.find_triangle("-1") == TM1
    assert STD.find_triangle("1/2") == triangle(ZERO, Q("1/2"), ONE)
    swapped = apply_P(STD, QPermutation.transposition("-1", "1"))
    assert swapped.find_triangle("1") == TM1


def test_A_moves_dot_ccw():
    d = apply_A(STD, ONE)
    assert d.dot(T1) == INF
    assert apply_A(d, ONE).dot(T1) == ZERO
    assert apply_A(STD, ONE, 3) == STD


def test_A_cubed_and_commuting_on_random_states():
    rng = random.Random(0)
    for _ in range(20):
        d = random_dotted(rng)
        j, k = rng.sample([ONE, Q("-1"), Q("2"), Q("1/2")], 2)
        assert apply_A(apply_A(apply_A(d, j), j), j) == d
        assert apply_A(apply_A(d, j), k) == apply_A(apply_A(d, k), j)


def _central_flip_state():
    # dot placements on triangles [-1] and [1] for which T[-1][1] applies
    for p in range(3):
        for q in range(3):
            d = apply_A(apply_A(STD, Q("-1"), p), ONE, q)
            try:
                return d, apply_T(d, Q("-1"), ONE)
            except KMoveError:
                continue
    raise AssertionError("no placement makes T[-1][1] applicable")


def test_T_flips_the_root_edge():
    before, after = _central_flip_state()
    assert after.tess == flip(before.tess, (ZERO, INF))[0]
    assert apply_T_inv(after, Q("-1"), ONE) == before


def test_T_reports_reason():
    with pytest.raises(KMoveError, match="T needs"):
        apply_T(STD, ONE, Q("2"))


def test_P_laws():
    g1 = QPermutation.transposition("1", "2")
    g2 = QPermutation.transposition("2", "-1/2")
    d = apply_A(STD, ONE)
    assert apply_P(STD, QPermutation.identity()) == STD
    assert apply_P(apply_P(d, g2), g1) == apply_P(d, g1.compose(g2))
    g = g1.compose(g2)
    assert apply_P(apply_A(d, Q("2")), g) == apply_A(apply_P(d, g), g(Q("2")))


def test_qpermutation_group_laws():
    a = QPermutation.transposition("1", "3")
    b = QPermutation.transposition("3", "-1/2")
    c = QPermutation.transposition("-1/2", "2")
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).inverse() == b.inverse() @ a.inverse()
    assert (a @ b) ** 3 == QPermutation.identity()
    assert QPermutation.from_json((a @ b).to_json()) == a @ b


def test_kword_parser():
    w = parse_kword("A[1] T[1][2]' P(swap(1,2)) (A[-1/2])^2")
    assert [x.kind for x in w] == ["A", "T", "P", "A", "A"]
    assert w[1].exp == -1
    assert format_kword(invert_kword(invert_kword(w))) == format_kword(w)
    assert parse_kword("") == ()
    for bad in ("A[0]", "A[1", "B[1]", "T[1]", "P(nope)"):
        with pytest.raises(ValueError):
            parse_kword(bad)


def test_kword_and_inverse():
    rng = random.Random(9)
    d = random_dotted(rng)
    assert apply_kword(STD, ()) == STD
    w = (A(ONE), P(QPermutation.transposition("1", "2")), A(Q("2"), -1))
    assert apply_kword(apply_kword(d, w), invert_kword(w)) == d


def test_kword_inapplicable_position():
    with pytest.raises(KMoveError, match="letter 2"):
        apply_kword(STD, (A(ONE), A(ONE), T(ONE, Q("2"))))


def test_json_roundtrip():
    rng = random.Random(3)
    for _ in range(10):
        d = random_dotted(rng)
        assert DottedTessellation.from_json(d.to_json()) == d
        assert dotted_equal(d, d)


def test_relation_families():
    # every relation acts identically on at least 30 states where both sides apply
    checks = check_k_relations(seed=0)
    assert len(checks) >= 11
    for c in checks:
        assert c["ok"], c
        assert c["detail"]["applicable"] >= 30, c


def test_freeness_witness():
    assert apply_A(STD, ONE) != STD
    assert apply_P(STD, QPermutation.transposition("1", "2")) != STD


def test_inverse_A_is_A_squared():
    rng = random.Random(6)
    for _ in range(15):
        d = random_dotted(rng)
        j = rng.choice([ONE, Q("-1"), Q("2"), Q("1/3")])
        assert apply_A(d, j, -1) == apply_A(apply_A(d, j), j)
