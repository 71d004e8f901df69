import random

import pytest
from hypothesis import given, settings, strategies as st

from multcode.field import PrimeField
from multcode.mcode import (CodeParams, Grid, HalfInt, ReceivedWord, dmin_s, delta_mult,
                            delta_mult_varying, encode, hamming, unique_decoding_radius,
                            within_radius, zero_word)
from multcode.poly import Jet, MultiPoly, random_poly
from multcode import channel

GF5, GF13 = PrimeField(5), PrimeField(13)


def params(p, m, n, s, d):
    return CodeParams(s, d, Grid.cube(PrimeField(p), range(n), m))


def J(field, m, order, coeffs):
    return Jet(field, m, order, coeffs)


def test_encode_product_on_binary_square():
    pr = CodeParams(2, 2, Grid.cube(GF5, [0, 1], 2))
    w = encode(MultiPoly(GF5, 2, {(1, 1): 1}), pr)
    assert w[(1, 1)] == J(GF5, 2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    assert w[(0, 0)] == Jet.zero(GF5, 2, 2)
    assert w[(1, 0)] == J(GF5, 2, 2, {(0, 1): 1})


def test_encode_constants():
    pr = params(5, 2, 3, 2, 2)
    assert encode(MultiPoly.zero(GF5, 2), pr) == zero_word(pr)
    one = encode(MultiPoly.constant(GF5, 2, 1), pr)
    assert all(one[pt] == J(GF5, 2, 2, {(0, 0): 1}) for pt in pr.grid.points())


def test_encode_rejects_degree_overflow_and_mismatch():
    pr = params(5, 2, 3, 2, 2)
    with pytest.raises(ValueError):
        encode(MultiPoly(GF5, 2, {(3, 0): 1}), pr)
    with pytest.raises(ValueError):
        encode(MultiPoly(GF5, 1, {(1,): 1}), pr)


def test_dmin_examples():
    U = lambda cs, s: J(GF5, 1, s, {(k,): c for k, c in cs.items()})
    assert dmin_s(U({2: 1, 3: 1}, 4), 4) == 2
    assert dmin_s(Jet.zero(GF5, 1, 3), 3) == 3
    assert dmin_s(U({0: 1, 1: 1}, 2), 2) == 0


def test_delta_mult_small_examples():
    pr = params(13, 2, 6, 2, 5)
    f = zero_word(pr)
    assert delta_mult(f, f) == 0 and hamming(f, f) == 0
    g = f.replace({(0, 0): J(GF13, 2, 2, {(0, 0): 3, (1, 0): 1})})
    assert delta_mult(f, g) == 2 and hamming(f, g) == 1
    h = f.replace({(0, 0): J(GF13, 2, 2, {(0, 1): 3})})
    assert delta_mult(f, h) == 1


def test_distance_requires_same_code():
    with pytest.raises(ValueError):
        delta_mult(zero_word(params(5, 2, 3, 2, 2)), zero_word(params(5, 2, 3, 2, 3)))


def test_varying_distance_examples():
    U = lambda cs, s: J(GF5, 1, s, {(k,): c for k, c in enumerate(cs)})
    assert delta_mult_varying([U([1, 2], 2)] * 2, [U([1, 2], 2)] * 2, [2, 1]) == 0
    f = [U([0, 1], 2), U([0], 2)]
    g = [Jet.zero(GF5, 1, 2)] * 2
    assert delta_mult_varying(f, g, [2, 1]) == 1
    with pytest.raises(ValueError):
        delta_mult_varying(f, g, [3, 1])


def test_varying_with_constant_vector_matches_delta_mult():
    rng = random.Random(2)
    pr = params(7, 1, 5, 3, 4)
    f, g = channel.random_word(pr, rng), channel.random_word(pr, rng)
    pts = list(pr.grid.points())
    assert delta_mult_varying([f[a] for a in pts], [g[a] for a in pts], [3] * 5) == delta_mult(f, g)


@pytest.mark.parametrize("m, n, s, d, twice", [(2, 6, 2, 5, 42), (1, 4, 1, 1, 3), (3, 4, 2, 3, 80)])
def test_radius_examples(m, n, s, d, twice):
    pr = params(13, m, n, s, d)
    assert unique_decoding_radius(pr) == HalfInt(twice)
    assert within_radius((twice - 1) // 2, pr) and not within_radius((twice + 1) // 2, pr)


def test_halfint_behaviour():
    a = HalfInt.of("3/2")
    assert a == HalfInt(3) and float(a) == 1.5 and a > 1 and a < 2
    assert HalfInt.of(2) == 2 and {HalfInt(4): "x"}[2] == "x"
    assert a + HalfInt(1) == 2 and -a == HalfInt(-3)
    with pytest.raises(ValueError):
        HalfInt.of("1/3")


def test_params_and_grid_validation():
    with pytest.raises(ValueError):
        CodeParams(2, 12, Grid.cube(GF13, range(6), 2))
    with pytest.raises(ValueError):
        CodeParams(0, 0, Grid.cube(GF13, range(6), 2))
    with pytest.raises(ValueError):
        Grid(GF13, ((0, 1), (0, 1, 2)))
    with pytest.raises(ValueError):
        Grid(GF13, ((0, 0, 1),))
    with pytest.raises(ValueError):
        Grid(GF5, ((0, 7),))
    g = Grid(GF13, ((3, 1), (5, 2)))
    assert g.sets == ((1, 3), (2, 5))
    assert list(g.points()) == [(1, 2), (1, 5), (3, 2), (3, 5)]


def test_received_word_validation():
    pr = params(5, 2, 2, 2, 1)
    syms = dict(zero_word(pr).symbols)
    syms.pop((0, 0))
    with pytest.raises(ValueError):
        ReceivedWord(pr, syms)
    syms[(0, 0)] = Jet.zero(GF5, 2, 3)
    with pytest.raises(ValueError):
        ReceivedWord(pr, syms)


def test_symbols_may_use_distinct_axes():
    pr = CodeParams(2, 2, Grid(GF13, ((0, 1, 2), (5, 7, 11))))
    P = MultiPoly(GF13, 2, {(1, 1): 2, (0, 1): 1})
    w = encode(P, pr)
    assert w[(2, 7)].coeff((0, 0)) == P([2, 7])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_distance_is_a_metric(seed):
    rng = random.Random(seed)
    pr = params(5, 2, 3, 2, 2)
    f, g, h = (channel.random_word(pr, rng) for _ in range(3))
    assert delta_mult(f, g) == delta_mult(g, f)
    assert (delta_mult(f, g) == 0) == (f == g)
    assert delta_mult(f, h) <= delta_mult(f, g) + delta_mult(g, h)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_order_one_distance_is_hamming(seed):
    rng = random.Random(seed)
    pr = params(5, 2, 4, 1, 2)
    f, g = channel.random_word(pr, rng), channel.random_word(pr, rng)
    assert delta_mult(f, g) == hamming(f, g)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(13, 2, 6, 2, 5), (7, 3, 3, 2, 3), (5, 1, 5, 3, 9), (3, 2, 3, 2, 2)]),
       st.integers(0, 10 ** 6))
def test_schwartz_zippel_and_hamming_bounds(shape, seed):
    p, m, n, s, d = shape
    pr = params(p, m, n, s, d)
    rng = random.Random(seed)
    P = random_poly(pr.field, m, d, rng)
    Q = random_poly(pr.field, m, d, rng)
    if P == Q:
        return
    cp, cq = encode(P, pr), encode(Q, pr)
    dist = delta_mult(cp, cq)
    assert dist >= n ** (m - 1) * (s * n - d)
    assert dist <= s * hamming(cp, cq)
