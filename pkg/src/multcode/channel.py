"""Seeded error injection for jet words.

Adding an error jet whose lowest nonzero monomial has degree ``c`` costs
exactly ``s - c`` in multiplicity distance, so every helper here knows the
distance it inflicts without re-measuring.
"""

from __future__ import annotations

import random

from .mcode import ReceivedWord
from .poly import Jet, exponents_of_degree, graded_exponents


class BudgetUnreachable(ValueError):
    pass


def error_jet(field, m: int, s: int, cutoff: int, rng: random.Random) -> Jet:
    """Random jet with all monomials of degree >= cutoff and at least one
    nonzero monomial of degree exactly ``cutoff``."""
    if not 0 <= cutoff < s:
        raise ValueError(f"cutoff must lie in [0, {s})")
    p = field.p
    coeffs = {e: rng.randrange(p) for e in graded_exponents(m, s) if sum(e) > cutoff}
    lead = exponents_of_degree(m, cutoff)
    coeffs.update({e: rng.randrange(p) for e in lead})
    forced = rng.choice(lead)
    coeffs[forced] = rng.randrange(1, p)
    return Jet(field, m, s, coeffs)


def _apply(word: ReceivedWord, plan, rng) -> ReceivedWord:
    pr = word.params
    syms = dict(word.symbols)
    for pt, cutoff in plan:
        syms[pt] = syms[pt] + error_jet(pr.field, pr.m, pr.s, cutoff, rng)
    return ReceivedWord._unchecked(pr, syms)


def corrupt_symbols(word: ReceivedWord, count: int, rng: random.Random) -> ReceivedWord:
    """Replace ``count`` distinct symbols by jets differing in the constant
    term (distance ``s`` each)."""
    pts = list(word.points())
    if not 0 <= count <= len(pts):
        raise BudgetUnreachable(f"cannot corrupt {count} of {len(pts)} symbols")
    return _apply(word, [(pt, 0) for pt in rng.sample(pts, count)], rng)


def corrupt_exact(word: ReceivedWord, budget: int, rng: random.Random,
                  mode: str = "symbol", cutoff: int = 0) -> ReceivedWord:
    """Corrupt to multiplicity distance exactly ``budget``.

    ``mode="symbol"`` spends ``s`` per point; ``mode="lowdeg"`` keeps the
    coefficients below ``cutoff`` intact and spends ``s - cutoff`` per point.
    """
    s = word.params.s
    if mode == "symbol":
        cutoff = 0
    elif mode != "lowdeg":
        raise ValueError(f"unknown corruption mode {mode!r}")
    if not 0 <= cutoff < s:
        raise BudgetUnreachable(f"cutoff {cutoff} outside [0, {s})")
    cost = s - cutoff
    pts = list(word.points())
    if budget < 0 or budget % cost or budget // cost > len(pts):
        raise BudgetUnreachable(
            f"budget {budget} is not a multiple of {cost} up to {cost * len(pts)}")
    return _apply(word, [(pt, cutoff) for pt in rng.sample(pts, budget // cost)], rng)


def corrupt_random(word: ReceivedWord, budget: int, rng: random.Random,
                   exact: bool = False) -> ReceivedWord:
    """Mixed-depth corruption of total distance at most ``budget``.

    Points are visited in random order and each gets a random cutoff whose
    cost still fits. With ``exact=True`` each cost is also kept large enough
    for the remaining points to spend the rest, so the distance equals
    ``budget``.
    """
    s = word.params.s
    pts = list(word.points())
    if exact and not 0 <= budget <= s * len(pts):
        raise BudgetUnreachable(f"budget {budget} is outside [0, s * n^m = {s * len(pts)}]")
    rng.shuffle(pts)
    left = budget
    plan = []
    for k, pt in enumerate(pts):
        if left <= 0:
            break
        least = max(1, left - s * (len(pts) - k - 1)) if exact else 1
        cost = rng.randint(least, min(s, left))
        plan.append((pt, s - cost))
        left -= cost
    return _apply(word, plan, rng)


def random_word(params, rng: random.Random) -> ReceivedWord:
    """Uniformly random jet at every point."""
    p = params.field.p
    size = len(graded_exponents(params.m, params.s))
    syms = {pt: Jet.from_vector(params.field, params.m, params.s,
                                [rng.randrange(p) for _ in range(size)])
            for pt in params.grid.points()}
    return ReceivedWord._unchecked(params, syms)


def layered_column_attack(word: ReceivedWord, B, rng: random.Random) -> ReceivedWord:
    """Bivariate (s = 2) corruption that fools every level-1 column at once.

    On each point ``(a, b)`` with ``b`` in ``B`` the constant term is changed,
    so each level-0 column carries ``|B|`` errors of cost 2. The z_1
    coefficient is shifted by ``c_a * V(b)`` where ``V`` vanishes on
    ``T_2 \\ B``; along every column that shift is itself a polynomial of
    degree ``n - |B|``, so each level-1 column still looks like a valid
    codeword when ``d >= n - |B|``, just the wrong one.
    """
    pr = word.params
    if pr.m != 2 or pr.s != 2:
        raise ValueError("the attack is defined for bivariate words with s = 2")
    p, F = pr.field.p, pr.field
    T1, T2 = pr.grid.sets
    B = sorted({int(b) for b in B})
    if not B or any(b not in T2 for b in B):
        raise ValueError("B must be a non-empty subset of the second axis")
    rest = [t for t in T2 if t not in B]
    if pr.d < len(rest):
        raise ValueError(f"need d >= n - |B| = {len(rest)} for the level-1 shift to be a codeword")

    def V(y):
        out = 1
        for t in rest:
            out = out * (y - t) % p
        return out

    syms = dict(word.symbols)
    for a in T1:
        c_a = rng.randrange(1, p)
        for b in B:
            err = {(0, 0): rng.randrange(1, p), (1, 0): c_a * V(b) % p,
                   (0, 1): rng.randrange(p)}
            syms[(a, b)] = syms[(a, b)] + Jet(F, 2, 2, err)
    return ReceivedWord._unchecked(pr, syms)
