import random
from fractions import Fraction
from itertools import product
from math import gcd, prod

import pytest

from fpgroup import abelianization, parse_presentation, triangle_presentation
from seifert import (
    SeifertInvariants, SeifertSyntaxError, euler_number, h1_order, kill_regular_fiber, matches_triangle,
    normalization_move, parse_seifert, pi1_presentation,
)

Y = "S2(0; 1/2, -1/3, -1/7)"


def _fibers():
    return [Fraction(beta, alpha) for alpha in (2, 3, 5, 7) for beta in (-2, -1, 1, 2) if gcd(alpha, beta) == 1]


def _expected_h1(s):
    e = euler_number(s)
    return None if e == 0 else abs(prod(s.multiplicities) * e)


def test_parse_and_print():
    s = parse_seifert(Y)
    assert s.b == 0
    assert s.fibers == (Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 7))
    assert str(s) == Y
    assert parse_seifert(str(s)) == s
    assert str(parse_seifert("S2(0;)")) == "S2(0;)"
    assert parse_seifert("S2(0; 2/1, 1/2)") == SeifertInvariants(2, (Fraction(1, 2),))


def test_parse_errors():
    for text in ["S2(0, 1/2)", "S2(0; 1/0)", "S2(0; x)", "S3(0;)"]:
        with pytest.raises(SeifertSyntaxError):
            parse_seifert(text)


def test_multiplicity_one_fibers_are_rejected():
    with pytest.raises(ValueError):
        SeifertInvariants(0, (Fraction(1, 1),))


def test_euler_number():
    assert euler_number(parse_seifert(Y)) == Fraction(-1, 42)
    assert euler_number(parse_seifert("S2(0;)")) == 0
    assert euler_number(parse_seifert("S2(1;)")) == -1


def test_pi1_presentation():
    p = pi1_presentation(parse_seifert(Y))
    assert p.generator_names == ("x1", "x2", "x3", "h")
    assert p.relator_count == 7
    assert abelianization(p).is_trivial()
    assert str(pi1_presentation(parse_seifert("S2(0;)"))) == "<h | >"
    assert str(pi1_presentation(parse_seifert("S2(2;)"))) == "<h | h^-2>"


def test_h1_examples():
    assert h1_order(parse_seifert(Y)) == 1
    assert h1_order(parse_seifert("S2(0; -1/3, -1/3, -1/3)")) == 27
    assert h1_order(parse_seifert("S2(0; 1/2, -1/2)")) is None
    assert h1_order(parse_seifert("S2(1;)")) == 1
    assert h1_order(parse_seifert("S2(0;)")) is None


def test_h1_matches_formula_on_sweep():
    for b in (-1, 0, 1):
        for n in (1, 2):
            for fibers in product(_fibers(), repeat=n):
                s = SeifertInvariants(b, fibers)
                assert h1_order(s) == _expected_h1(s)
    rng = random.Random(42)
    for _ in range(300):
        s = SeifertInvariants(rng.choice((-1, 0, 1)), tuple(rng.choice(_fibers()) for _ in range(3)))
        assert h1_order(s) == _expected_h1(s)


def test_normalization_move_preserves_invariants():
    rng = random.Random(3)
    for _ in range(100):
        s = SeifertInvariants(rng.choice((-1, 0, 1)), tuple(rng.choice(_fibers()) for _ in range(3)))
        moved = normalization_move(s, rng.randrange(3))
        assert euler_number(moved) == euler_number(s)
        assert h1_order(moved) == h1_order(s)
        assert moved.multiplicities == s.multiplicities
    with pytest.raises(IndexError):
        normalization_move(parse_seifert("S2(0;)"), 0)


def test_kill_fiber_gives_the_triangle_group():
    orbifold = kill_regular_fiber(parse_seifert(Y))
    assert str(orbifold) == "<x1, x2, x3 | x1^2, x2^3, x3^7, x1*x2*x3>"
    assert matches_triangle(orbifold, 2, 3, 7)
    assert not matches_triangle(orbifold, 2, 3, 5)


def test_kill_fiber_edge_cases():
    assert str(kill_regular_fiber(parse_seifert("S2(0;)"))) == "< | >"
    trivial = kill_regular_fiber(parse_seifert("S2(5; 1/2)"))
    assert str(trivial) == "<x1 | x1^2, x1>"
    assert abelianization(trivial).is_trivial()


def test_matches_triangle_is_order_insensitive():
    assert matches_triangle(triangle_presentation(2, 3, 7), 7, 3, 2)
    assert matches_triangle(parse_presentation("<x,y,z | z^7, y^3, x^2, x*y*z>"), 2, 3, 7)
    assert matches_triangle(parse_presentation("<x,y,z | x^2, y^3, z^7, z^-1*y^-1*x^-1>"), 2, 3, 7)
    assert not matches_triangle(parse_presentation("<x,y | x^2, y^3, (x*y)^7>"), 2, 3, 7)
    assert not matches_triangle(parse_presentation("<x,y,z | x^2, y^3, z^7, x*y*y*z>"), 2, 3, 7)
