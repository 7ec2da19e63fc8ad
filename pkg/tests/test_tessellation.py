from tqc.exactnum import INF, ONE, ZERO, parse_rational as Q
from tqc.tessellation import (
    Tessellation,
    edge,
    flip,
    from_polygon,
    standard_farey,
    tess_equal,
    third_vertex,
    triangle,
)

TAU = standard_farey()


def test_standard_edges():
    assert TAU.contains_edge(ZERO, INF)
    assert not TAU.contains_edge(Q("1/3"), Q("2/3"))
    assert set(TAU.triangles_at(ZERO, INF)) == {triangle(ZERO, ONE, INF), triangle(ZERO, Q("-1"), INF)}
    assert TAU.is_standard


def test_third_vertex():
    assert third_vertex(TAU, (ZERO, INF), "right") == ONE
    assert third_vertex(TAU, (ZERO, INF), "left") == Q("-1")
    assert third_vertex(TAU, (ONE, Q("2")), "right") == Q("3/2")


def test_flip_root_edge():
    t, e = flip(TAU, (ZERO, INF))
    assert e == edge(Q("-1"), ONE)
    assert t.contains_edge(Q("-1"), ONE) and not t.contains_edge(ZERO, INF)
    back, e2 = flip(t, e)
    assert tess_equal(back, TAU) and e2 == edge(ZERO, INF)


def test_flip_away_from_root():
    t, e = flip(TAU, (ONE, Q("2")))
    assert e == edge(Q("3/2"), INF)
    assert not tess_equal(t, TAU)
    assert tess_equal(flip(t, e)[0], TAU)


def test_equality_and_json():
    t, _ = flip(TAU, (ZERO, INF))
    assert tess_equal(TAU, TAU) and not tess_equal(t, TAU)
    assert Tessellation.from_json(t.to_json()) == t


def test_polygon_builder():
    t = from_polygon(["0", "1/3", "1/2", "1", "2", "inf", "-2", "-1"],
                     [("0", "-2"), ("1", "-2"), ("-2", "2"), ("1/3", "1"), ("0", "1")])
    assert len(t.triangles) == 6
    for x, y in [("0", "-2"), ("1", "-2"), ("-2", "2"), ("1/3", "1"), ("0", "1")]:
        assert t.contains_edge(Q(x), Q(y))
