"""Polynomial core: field, arithmetic, orders, grammar, sampling."""

import random

import pytest

from genmat.polyring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    PrimeField,
    RingMismatchError,
    elimination_order,
    multidegree,
    parse_polynomial,
    poly_to_str,
    polynomial_ring,
    random_linear_combination,
    substitute,
)

from oracles import naive_mul, random_poly


def test_prime_field_rejects_composites():
    for bad in (0, 1, 4, 100, 32001):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_prime_field_ops():
    F = PrimeField(32003)
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randrange(32003), rng.randrange(32003)
        assert F.add(a, b) == (a + b) % 32003
        assert F.mul(a, b) == a * b % 32003
        assert F.sub(a, b) == (a - b) % 32003
        if a:
            assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_ring_rejects_bad_names():
    with pytest.raises(ValueError):
        polynomial_ring(101, "x x")
    with pytest.raises(ValueError):
        polynomial_ring(101, ["x", "2y"])
    with pytest.raises(ValueError):
        polynomial_ring(101, [])


def test_ring_axioms_sampled():
    # Commutative ring laws over 1000 random triples.
    R = polynomial_ring(101, "x y z")
    rng = random.Random(2024)
    zero, one = R.zero(), R.one()
    for _ in range(1000):
        a = random_poly(R, rng, max_degree=3, terms=3)
        b = random_poly(R, rng, max_degree=3, terms=3)
        c = random_poly(R, rng, max_degree=3, terms=3)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        assert a * zero == zero


def test_multiplication_matches_schoolbook_oracle():
    R = polynomial_ring(32003, "x y z w")
    rng = random.Random(7)
    for _ in range(100):
        a = random_poly(R, rng)
        b = random_poly(R, rng)
        assert a * b == naive_mul(a, b)


def test_expansion_term_count():
    # (x+y)*(z+w) distributes into exactly four monomials.
    R = polynomial_ring(32003, "x y z w")
    x, y, z, w = R.gens()
    prod = (x + y) * (z + w)
    assert len(prod.terms) == 4
    assert prod == x * z + x * w + y * z + y * w


def test_char_two_square():
    R = polynomial_ring(2, "x y")
    x, y = R.gens()
    assert (x + y) ** 2 == x**2 + y**2


def test_powers():
    R = polynomial_ring(101, "x y")
    x, y = R.gens()
    assert (x + y) ** 0 == R.one()
    assert (x + y) ** 3 == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_ring_mismatch():
    a = polynomial_ring(101, "x y").var("x")
    b = polynomial_ring(101, "x z").var("x")
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * b


def test_parse_known_forms():
    R = polynomial_ring(32003, "x y z w")
    x, y, z, w = R.gens()
    assert R.parse("2*x^2*y - z*w + 5") == 2 * x**2 * y - z * w + 5
    assert R.parse("x") == x
    assert R.parse("-x") == -x
    assert R.parse("0") == R.zero()
    assert R.parse("7") == R.const(7)
    assert R.parse("x*x*x") == x**3
    assert R.parse("3*2*x") == 6 * x
    assert R.parse("x - x") == R.zero()


def test_print_known_forms():
    R = polynomial_ring(32003, "x y z w")
    x, y, z, w = R.gens()
    assert str(2 * x**2 * y - z * w + 5) == "2*x^2*y - z*w + 5"
    assert str(R.zero()) == "0"
    assert str(-x + 5) == "-x + 5"
    assert str(x - y) == "x - y"
    assert str(R.const(32002)) == "-1"


def test_parse_print_round_trip_random():
    R = polynomial_ring(32003, "x y z")
    rng = random.Random(99)
    for _ in range(300):
        f = random_poly(R, rng)
        assert R.parse(poly_to_str(f)) == f
        assert R.parse(poly_to_str(f, LEX)) == f


def test_parse_errors_carry_positions():
    R = polynomial_ring(101, "x y")
    for bad in ("x + ", "q", "x^", "x ^ y", "2 +* x", "(x+y)", "x..y", ""):
        with pytest.raises(ValueError):
            parse_polynomial(R, bad)
    with pytest.raises(ValueError, match="unknown variable 'q'"):
        parse_polynomial(R, "x + q")


def test_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder("degrevlex")
    with pytest.raises(ValueError):
        MonomialOrder("elim")
    with pytest.raises(ValueError):
        MonomialOrder("lex", split=2)


def test_orders_are_multiplicative_well_orderings():
    # key comparisons survive common multiplication; 1 is minimal.
    rng = random.Random(5)
    orders = [GREVLEX, LEX, elimination_order(2)]
    for _ in range(500):
        a = tuple(rng.randrange(4) for _ in range(4))
        b = tuple(rng.randrange(4) for _ in range(4))
        c = tuple(rng.randrange(4) for _ in range(4))
        for order in orders:
            ka, kb = order.key(a), order.key(b)
            kac = order.key(tuple(x + y for x, y in zip(a, c)))
            kbc = order.key(tuple(x + y for x, y in zip(b, c)))
            assert (ka < kb) == (kac < kbc)
            assert (ka == kb) == (a == b)
            if a != (0, 0, 0, 0):
                assert order.key((0, 0, 0, 0)) < ka


def test_grevlex_tie_break():
    # Same total degree: the smaller trailing exponent wins.
    assert GREVLEX.key((2, 0)) > GREVLEX.key((1, 1)) > GREVLEX.key((0, 2))


def test_elimination_order_blocks():
    order = elimination_order(2)
    rng = random.Random(17)
    for _ in range(300):
        with_block = tuple(rng.randrange(3) for _ in range(4))
        if not any(with_block[:2]):
            continue
        without = (0, 0) + tuple(rng.randrange(5) for _ in range(2))
        assert order.key(with_block) > order.key(without)


def test_leading_term():
    R = polynomial_ring(101, "x y")
    x, y = R.gens()
    f = x * y + y**2 + x
    assert f.leading_monomial(GREVLEX) == (1, 1)
    assert f.leading_monomial(LEX) == (1, 1)
    g = x + y**2
    assert g.leading_monomial(GREVLEX) == (0, 2)
    assert g.leading_monomial(LEX) == (1, 0)
    with pytest.raises(ValueError):
        R.zero().leading_term()


def test_multidegree():
    R = polynomial_ring(101, "x1 x2 y1 y2")
    x1, x2, y1, y2 = R.gens()
    segre = [(1, 0), (1, 0), (0, 1), (0, 1)]
    assert multidegree(x1 * y2, segre) == (1, 1)
    assert multidegree(x1 * x2, segre) == (2, 0)
    assert multidegree(x1 + y1, segre) is None
    assert multidegree(R.zero(), segre) is None
    assert multidegree(R.const(1), segre) == (0, 0)
    std = [(1,)] * 4
    assert multidegree(x1 * y1 + x2 * y2, std) == (2,)
    with pytest.raises(ValueError):
        multidegree(x1, [(1, 0), (1, 0)])


def test_multidegree_multiplicative_sampled():
    R = polynomial_ring(101, "a b c")
    grading = [(1, 0), (0, 1), (1, 1)]
    rng = random.Random(31)
    for _ in range(200):
        e1 = tuple(rng.randrange(3) for _ in range(3))
        e2 = tuple(rng.randrange(3) for _ in range(3))
        m1 = R.monomial(e1, rng.randrange(1, 101))
        m2 = R.monomial(e2, rng.randrange(1, 101))
        d1, d2 = multidegree(m1, grading), multidegree(m2, grading)
        assert multidegree(m1 * m2, grading) == tuple(
            a + b for a, b in zip(d1, d2)
        )


def test_random_linear_combination_deterministic():
    R = polynomial_ring(32003, "x y z w")
    x, y, z, w = R.gens()
    basis = [x + y, z, w]
    f1, c1 = random_linear_combination(basis, random.Random(42))
    f2, c2 = random_linear_combination(basis, random.Random(42))
    f3, _ = random_linear_combination(basis, random.Random(43))
    assert f1 == f2 and c1 == c2
    assert f1 != f3
    assert len(c1) == 3
    # Combination of degree-one elements stays degree one.
    assert multidegree(f1, [(1,)] * 4) == (1,)


def test_random_linear_combination_validation():
    R = polynomial_ring(101, "x y")
    x, y = R.gens()
    with pytest.raises(ValueError):
        random_linear_combination([], random.Random(0))
    with pytest.raises(ValueError):
        random_linear_combination([x, x * y], random.Random(0), [(1,), (1,)])


def test_substitute_is_a_ring_map():
    R = polynomial_ring(101, "x y")
    T = polynomial_ring(101, "s t")
    s, t = T.gens()
    images = [s + t, s * t]
    rng = random.Random(13)
    for _ in range(100):
        f = random_poly(R, rng, max_degree=2, terms=3)
        g = random_poly(R, rng, max_degree=2, terms=3)
        fs = substitute(f, images, T)
        gs = substitute(g, images, T)
        assert substitute(f + g, images, T) == fs + gs
        assert substitute(f * g, images, T) == fs * gs


def test_polynomial_hash_consistency():
    R = polynomial_ring(101, "x y")
    x, y = R.gens()
    a = x + y
    b = y + x
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert a != x
    assert (x * 0) == 0
