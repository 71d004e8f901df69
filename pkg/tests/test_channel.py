import random

import pytest
from hypothesis import given, settings, strategies as st

from multcode.field import PrimeField
from multcode.mcode import CodeParams, Grid, delta_mult, encode, hamming
from multcode.poly import random_poly
from multcode import channel

GF13 = PrimeField(13)
PR = CodeParams(3, 5, Grid.cube(GF13, range(4), 2))


def codeword(seed):
    return encode(random_poly(GF13, 2, 5, random.Random(seed)), PR)


def test_error_jet_cost_is_exact():
    rng = random.Random(0)
    for cutoff in range(3):
        J = channel.error_jet(GF13, 2, 3, cutoff, rng)
        assert J.min_degree() == cutoff


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 48), st.integers(0, 10 ** 6))
def test_exact_random_budget(budget, seed):
    c = codeword(seed)
    f = channel.corrupt_random(c, budget, random.Random(seed), exact=True)
    assert delta_mult(f, c) == budget


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 60), st.integers(0, 10 ** 6))
def test_random_budget_is_an_upper_bound(budget, seed):
    c = codeword(seed)
    assert delta_mult(channel.corrupt_random(c, budget, random.Random(seed)), c) <= budget


def test_symbol_and_lowdeg_modes():
    c = codeword(1)
    f = channel.corrupt_symbols(c, 4, random.Random(1))
    assert delta_mult(f, c) == 12 and hamming(f, c) == 4
    g = channel.corrupt_exact(c, 6, random.Random(1), mode="lowdeg", cutoff=2)
    assert delta_mult(g, c) == 6 and hamming(g, c) == 6
    assert all(g[pt].coeff((0, 0)) == c[pt].coeff((0, 0)) for pt in PR.grid.points())


def test_unreachable_budgets():
    c = codeword(2)
    with pytest.raises(channel.BudgetUnreachable):
        channel.corrupt_exact(c, 7, random.Random(0))
    with pytest.raises(channel.BudgetUnreachable):
        channel.corrupt_exact(c, 3 * 17, random.Random(0))
    with pytest.raises(channel.BudgetUnreachable):
        channel.corrupt_symbols(c, 17, random.Random(0))
    with pytest.raises(channel.BudgetUnreachable):
        channel.corrupt_random(c, 49, random.Random(0), exact=True)


def test_seed_determinism():
    c = codeword(3)
    a = channel.corrupt_random(c, 20, random.Random(9))
    b = channel.corrupt_random(c, 20, random.Random(9))
    assert a == b


def test_layered_attack_shape():
    F = PrimeField(17)
    pr = CodeParams(2, 7, Grid.cube(F, range(9), 2))
    c = encode(random_poly(F, 2, 7, random.Random(4)), pr)
    f = channel.layered_column_attack(c, [1, 5], random.Random(4))
    assert hamming(f, c) == 18 and delta_mult(f, c) == 36
    with pytest.raises(ValueError):
        channel.layered_column_attack(encode(random_poly(F, 2, 3, random.Random(0)),
                                             CodeParams(2, 3, Grid.cube(F, range(9), 2))), [1], random.Random(0))
