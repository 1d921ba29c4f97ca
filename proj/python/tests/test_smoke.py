from math import comb

import pytest

import rotpath as rp


def test_parse_and_print():
    t = rp.tree("((xx)x)")
    assert t.levels == [0, 1, 2, 1, 2, 1]
    assert t.steps == "++-+-"
    assert t.to_text("levels") == "0,1,2,1,2,1"
    assert rp.tree("+++--") == rp.StackGraph([0, 1, 2, 3, 2, 1])
    assert str(rp.mirror(t)) == "(x(xx))"
    assert len({t, rp.tree("++-+-")}) == 1


def test_errors_carry_the_code():
    with pytest.raises(rp.RotpathError, match="BelowFloor"):
        rp.StackGraph([0, 1, 0, 1])
    with pytest.raises(ValueError, match="ParseError"):
        rp.tree("((xx)y)")
    with pytest.raises(rp.RotpathError, match="InvalidSite"):
        rp.apply_lift(rp.tree("(x(xx))"), 3, 5)


def test_rotations():
    bottom = rp.left_comb(4)
    assert rp.lift_sites(bottom) == [(3, 5), (5, 7)]
    assert rp.apply_lift(bottom, 3, 5).levels == [0, 1, 2, 3, 2, 1, 2, 1]
    up = rp.apply_lift(rp.tree("((xx)x)"), 3, 5)
    assert rp.classify_step(rp.tree("((xx)x)"), up) == ("lift", 3, 5)
    assert rp.apply_lower(up, 3, 5) == rp.tree("((xx)x)")


def test_greedy_and_path():
    a = rp.StackGraph([0, 1, 2, 3, 2, 1, 2, 1])
    b = rp.StackGraph([0, 1, 2, 1, 2, 3, 2, 1])
    r = rp.greedy_common_lift(a, b)
    assert r["lifts_from_first"] == [(5, 7), (4, 6)]
    assert r["lifts_from_second"] == [(3, 7)]
    p = rp.find_rotation_path(a, b)
    assert p["steps"] == [("lower", 3, 5), ("lift", 5, 7)]
    assert p["sorted"]
    assert rp.greedy_distance(a, b) == 2 == rp.exact_distance(a, b)


def test_oracles_and_counts():
    assert rp.catalan(10) == 4862
    # Trees with n leaves.
    assert rp.catalan(40) == comb(78, 39) // 40
    assert len(rp.enumerate_trees(5)) == 14
    assert rp.tamari_leq(rp.left_comb(4), rp.right_comb(4))
    assert rp.minimal_upper_bounds(rp.StackGraph([0, 1, 2, 3, 2, 1, 2, 1]),
                                   rp.StackGraph([0, 1, 2, 1, 2, 3, 2, 1])) == [rp.right_comb(4)]


def test_random_and_decode():
    assert str(rp.random_stack_graph(10, 42)) == "((((x((xx)x))((xx)(xx)))x)x)"
    assert rp.enumerative_decode(3, 1, 2) == [1, 0, 0]
    big = rp.catalan(120)
    bits = rp.enumerative_decode(300, 150, big)
    assert sum(bits) == 150


def test_render_and_report():
    assert rp.hasse_dot(4).count(" -> ") == 5
    assert rp.tree_dot(rp.tree("(xx)")).count("->") == 2
    svg = rp.stack_graph_svg([(rp.tree("(xx)"), "t", "#000000")])
    assert svg.count("<polyline") == 1
    report = rp.conjecture_report(5)
    assert report["requirements_hold"]
    assert [s["n"] for s in report["sizes"]] == [1, 2, 3, 4, 5]
