import random

import pytest

from tqc.exactnum import INF, ONE, ZERO, parse_rational as Q
from tqc.marked import (
    MarkedTessellation,
    apply_alpha,
    apply_beta,
    apply_tword,
    format_tword,
    invert_tword,
    marked_equal,
    parse_tword,
    standard_marked,
    vertex_function,
)
from tqc.suites import T_RELATOR_WORDS, octagon_marked, random_marked, random_tword
from tqc.tessellation import flip, standard_farey

STD = standard_marked()


def test_standard():
    assert STD.doe == (ZERO, INF)
    assert STD.tess == standard_farey()
    assert marked_equal(STD, STD)


def test_alpha():
    m = apply_alpha(STD)
    assert m.doe == (ONE, Q("-1"))
    assert m.tess == flip(standard_farey(), (ZERO, INF))[0]
    assert not marked_equal(m, STD)
    m2 = apply_alpha(m)
    assert m2.tess == STD.tess and m2.doe == (INF, ZERO)


def test_beta_keeps_tessellation():
    m = apply_beta(STD)
    assert m.doe == (INF, Q("-1")) and m.tess == STD.tess
    rng = random.Random(1)
    for _ in range(50):
        r = random_marked(rng)
        assert apply_beta(r).tess == r.tess
        assert marked_equal(apply_tword(r, ("b", "b", "b")), r)


@pytest.mark.parametrize("word", T_RELATOR_WORDS)
def test_relators_fix_standard(word):
    assert marked_equal(apply_tword(STD, parse_tword(word)), STD)


def test_empty_word():
    assert parse_tword("") == ()
    assert marked_equal(apply_tword(STD, ()), STD)


def test_parser():
    assert parse_tword("(b a)^2 a'") == ("b", "a", "b", "a", "a'")
    assert parse_tword("[a, b]") == ("a", "b", "a'", "b'")
    assert invert_tword(("a", "b'")) == ["b", "a'"]
    assert format_tword(("b", "a'")) == "b a'"
    for bad in ("c", "(a", "[a b]", "a^x", "[a, b"):
        with pytest.raises(ValueError):
            parse_tword(bad)


def test_word_inverse():
    rng = random.Random(2)
    for _ in range(20):
        w = random_tword(rng, 8)
        m = apply_tword(STD, w)
        assert marked_equal(apply_tword(m, invert_tword(w)), STD)


def test_vertex_function_examples():
    assert vertex_function(STD).is_identity()
    f = vertex_function(octagon_marked())
    assert [f(Q(x)) for x in ("0", "inf", "1", "-1")] == [Q("-1"), ZERO, Q("-1/2"), Q("-2")]
    g = vertex_function(apply_alpha(STD))
    assert [g(Q(x)) for x in ("0", "inf", "1", "-1")] == [ONE, Q("-1"), INF, ZERO]


def test_vertex_function_anti_homomorphism():
    rng = random.Random(4)
    for _ in range(30):
        g, h = random_tword(rng, 6), random_tword(rng, 6)
        phi = lambda w: vertex_function(apply_tword(STD, w))
        assert phi(g + h) == phi(h).compose(phi(g))


def test_json_roundtrip():
    m = apply_tword(STD, parse_tword("a b a"))
    assert MarkedTessellation.from_json(m.to_json()) == m


def test_doe_must_be_an_edge():
    with pytest.raises(ValueError):
        MarkedTessellation(standard_farey(), (ZERO, Q("2")))
