"""Grid machinery and the coefficient/vanishing identities."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from combnull import (
    ArityMismatch,
    BadGridShape,
    FieldMismatch,
    Grid,
    GridTooLarge,
    InputError,
    MultiPoly,
    OutOfRange,
    PrimeField,
    RationalField,
    TheoremViolation,
    boolean_sum,
    grid_weighted_sum,
    grid_weights,
    iter_points,
    lagrange_denominator,
    lagrange_interpolate,
    parse_poly,
    second_nonvanish,
    signed_two_element_sum,
    weighted_power_sum,
    zp_full_sum,
)
from combnull.errors import EmptyInput, NotAMember
from combnull.nullstellensatz import (
    DEFAULT_MAX_GRID_POINTS,
    MAX_GRID_POINTS_ENV,
    resolve_max_points,
    set_fault_injection,
)

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)
Q = RationalField()


# ----------------------------------------------------------------------- grid


def test_grid_canonicalizes_and_validates():
    g = Grid(F5, [[3, 1], [0]])
    assert g.sets == ((1, 3), (0,))
    assert g.n_vars == 2
    assert g.point_count() == 2
    assert g.degree_bound() == 1
    assert g.target_exponents() == (1, 0)
    with pytest.raises(EmptyInput):
        Grid(F5, [])
    with pytest.raises(EmptyInput):
        Grid(F5, [[1], []])
    with pytest.raises(InputError):
        Grid(F5, [[1, 6]])  # 6 = 1 mod 5, repeated after coercion
    assert Grid(F5, [[0, 1]]) == Grid(F5, [[1, 0]])
    assert Grid(F5, [[0, 1]]) != Grid(F3, [[0, 1]])


def test_iter_points_order():
    g = Grid(F5, [[0, 1], [2, 3]])
    pts = list(iter_points(g))
    assert [p.value for p in pts] == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert [p.index for p in pts] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_resolve_max_points(monkeypatch):
    monkeypatch.delenv(MAX_GRID_POINTS_ENV, raising=False)
    assert resolve_max_points() == DEFAULT_MAX_GRID_POINTS
    assert resolve_max_points(10) == 10
    monkeypatch.setenv(MAX_GRID_POINTS_ENV, "123")
    assert resolve_max_points() == 123
    assert resolve_max_points(7) == 7  # explicit argument wins
    monkeypatch.setenv(MAX_GRID_POINTS_ENV, "zero")
    with pytest.raises(InputError):
        resolve_max_points()
    monkeypatch.setenv(MAX_GRID_POINTS_ENV, "-3")
    with pytest.raises(InputError):
        resolve_max_points()


def test_grid_cap_enforced(monkeypatch):
    g = Grid(F5, [[0, 1, 2], [0, 1, 2]])  # 9 points
    with pytest.raises(GridTooLarge):
        grid_weights(g, 8)
    monkeypatch.setenv(MAX_GRID_POINTS_ENV, "8")
    f = parse_poly("x1*x2", F5, 2)
    with pytest.raises(GridTooLarge):
        grid_weighted_sum(f, g)
    assert grid_weighted_sum(f, g, 9) is not None  # explicit override unblocks


# ---------------------------------------------------------------- denominators


def test_lagrange_denominator_oracle():
    elems = [0, 1, 3]
    for a in elems:
        expected = 1
        for b in elems:
            if b != a:
                expected = expected * (a - b) % 7
        assert lagrange_denominator(F7, elems, a) == expected
    assert lagrange_denominator(Q, [0, 2], 2) == Fraction(2)
    with pytest.raises(NotAMember):
        lagrange_denominator(F7, elems, 2)
    with pytest.raises(EmptyInput):
        lagrange_denominator(F7, [], 0)
    # singleton set: empty product
    assert lagrange_denominator(F7, [4], 4) == 1


def test_lagrange_denominator_known_values():
    assert lagrange_denominator(F5, [0, 1, 2], 1) == 4  # (1-0)(1-2) = -1
    # full residue set at 0: Wilson's theorem, (p-1)! = -1
    assert lagrange_denominator(F5, [0, 1, 2, 3, 4], 0) == 4


def test_singleton_grid_weights_are_one():
    g = Grid(F5, [[2], [4], [1]])
    w = grid_weights(g)
    assert w.weight((0, 0, 0)) == 1


def test_grid_weights_tables():
    g = Grid(F7, [[0, 1, 3], [2, 5]])
    w = grid_weights(g)
    for pt in iter_points(g):
        expected = 1
        for i, a in enumerate(pt.value):
            for b in g.sets[i]:
                if b != a:
                    expected = expected * (a - b) % 7
        assert w.weight(pt.index) == expected
    inv = w.inverse_tables()
    for i, table in enumerate(inv):
        for j, v in enumerate(table):
            assert F7.mul(v, w.denominators[i][j]) == 1


# ------------------------------------------------------------------ the kernel


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_weighted_power_sum_kernel_exhaustive(p):
    import itertools

    field = PrimeField(p)
    for size in range(1, min(5, p) + 1):
        for elems in itertools.combinations(range(p), size):
            for m in range(size):
                expected = 1 if m == size - 1 else 0
                assert weighted_power_sum(field, elems, m) == expected, (p, elems, m)


def test_weighted_power_sum_rational_and_errors():
    elems = [Fraction(1, 2), 3, -2]
    assert weighted_power_sum(Q, elems, 0) == 0
    assert weighted_power_sum(Q, elems, 1) == 0
    assert weighted_power_sum(Q, elems, 2) == 1
    with pytest.raises(OutOfRange):
        weighted_power_sum(Q, elems, 3)
    with pytest.raises(OutOfRange):
        weighted_power_sum(Q, elems, -1)
    with pytest.raises(InputError):
        weighted_power_sum(F5, [1, 6], 0)  # repeated residue
    with pytest.raises(EmptyInput):
        weighted_power_sum(F5, [], 0)


# ------------------------------------------------------------- interpolation


def test_lagrange_interpolate_recovers_data():
    pts, vals = [0, 1, 3, 4], [2, 2, 5, 0]
    f = lagrange_interpolate(F7, pts, vals)
    assert f.n_vars == 1
    assert f.total_degree() <= len(pts) - 1
    for x, y in zip(pts, vals):
        assert f.evaluate((x,)) == y


def test_lagrange_interpolate_uniqueness():
    # feeding a low-degree polynomial's own values back recovers it exactly
    g = parse_poly("3*x1^2 + x1 + 4", F7)
    pts = [0, 1, 2, 5]
    vals = [g.evaluate((x,)) for x in pts]
    assert lagrange_interpolate(F7, pts, vals) == g


def test_lagrange_interpolate_rational():
    f = lagrange_interpolate(Q, [0, 1, 2], [Fraction(1), Fraction(0), Fraction(1)])
    assert f == parse_poly("x1^2 - 2*x1 + 1", Q)


def test_lagrange_interpolate_errors():
    with pytest.raises(InputError):
        lagrange_interpolate(F7, [0, 0], [1, 2])
    with pytest.raises(InputError):
        lagrange_interpolate(F7, [0, 1], [1])
    with pytest.raises(EmptyInput):
        lagrange_interpolate(F7, [], [])


# --------------------------------------------------------- the grid identities


def test_frozen_coefficient_example():
    f = parse_poly("x1*x2", F3, 2)
    assert grid_weighted_sum(f, Grid(F3, [[0, 1], [0, 1]])) == 1


def test_poly_grid_compatibility():
    f = parse_poly("x1*x2", F3, 2)
    with pytest.raises(FieldMismatch):
        grid_weighted_sum(f, Grid(F5, [[0, 1], [0, 1]]))
    with pytest.raises(ArityMismatch):
        grid_weighted_sum(f, Grid(F3, [[0, 1]]))


@given(
    p=st.sampled_from([2, 3, 5, 7]),
    seed=st.integers(0, 10_000),
)
@settings(max_examples=150)
def test_weighted_sum_equals_top_coefficient(p, seed):
    rng = random.Random(seed)
    field = PrimeField(p)
    n = rng.randint(1, 3)
    sets = oracles.random_grid_sets(rng, n, p)
    bound = sum(len(s) - 1 for s in sets)
    terms = oracles.random_terms_zp(rng, n, p, bound)
    f = MultiPoly(field, n, terms)
    grid = Grid(field, sets)
    got = grid_weighted_sum(f, grid)
    # route 1: the raw-arithmetic oracle with Fermat inverses
    assert got == oracles.weighted_sum_zp(terms, [tuple(s) for s in sets], p)
    # route 2: direct coefficient lookup
    assert got == terms.get(grid.target_exponents(), 0)


@given(
    p=st.sampled_from([3, 5, 7]),
    seed=st.integers(0, 10_000),
)
@settings(max_examples=100)
def test_weighted_sum_vanishes_below_bound(p, seed):
    rng = random.Random(seed)
    field = PrimeField(p)
    n = rng.randint(1, 3)
    sets = oracles.random_grid_sets(rng, n, p)
    bound = sum(len(s) - 1 for s in sets)
    terms = oracles.random_terms_zp(rng, n, p, bound, strict=True)
    f = MultiPoly(field, n, terms)
    assert grid_weighted_sum(f, Grid(field, sets)) == 0


@given(seed=st.integers(0, 10_000))
@settings(max_examples=60)
def test_weighted_sum_restricted_beyond_bound(seed):
    rng = random.Random(seed)
    p = rng.choice([3, 5, 7])
    field = PrimeField(p)
    n = rng.randint(1, 3)
    sets = [sorted(rng.sample(range(p), rng.randint(2, min(4, p)))) for _ in range(n)]
    grid = Grid(field, sets)
    d = grid.target_exponents()
    terms = oracles.random_restricted_terms_zp(rng, d, p)
    f = MultiPoly(field, n, terms)
    assert f.is_restricted(d)
    assert grid_weighted_sum(f, grid) == terms.get(d, 0)


@given(seed=st.integers(0, 10_000))
@settings(max_examples=40)
def test_weighted_sum_rational_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 2)
    sets = []
    for _ in range(n):
        size = rng.randint(1, 3)
        pool = [Fraction(a, b) for a in range(-4, 5) for b in (1, 2, 3)]
        sets.append(sorted(rng.sample(sorted(set(pool)), size)))
    bound = sum(len(s) - 1 for s in sets)
    terms = oracles.random_terms_q(rng, n, bound)
    f = MultiPoly(Q, n, terms)
    grid = Grid(Q, sets)
    got = grid_weighted_sum(f, grid)
    assert got == oracles.weighted_sum_q(terms, [tuple(s) for s in sets])
    assert got == terms.get(grid.target_exponents(), Fraction(0))


# ------------------------------------------------------------- special cases


@given(seed=st.integers(0, 10_000))
@settings(max_examples=60)
def test_boolean_sum_consistency(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    terms = oracles.random_terms_zp(rng, n, 2, max_total=n + 2)
    f = MultiPoly(F2, n, terms)
    full = Grid(F2, [[0, 1]] * n)
    assert boolean_sum(f) == grid_weighted_sum(f, full)
    if f.total_degree() <= n:
        assert boolean_sum(f) == f.coefficient_of((1,) * n)


def test_boolean_sum_needs_z2():
    with pytest.raises(FieldMismatch):
        boolean_sum(parse_poly("x1", F3))


@given(seed=st.integers(0, 10_000))
@settings(max_examples=40)
def test_zp_full_sum_consistency(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    n = rng.randint(1, 2)
    field = PrimeField(p)
    terms = oracles.random_terms_zp(rng, n, p, max_total=n * (p - 1))
    f = MultiPoly(field, n, terms)
    full = Grid(field, [list(range(p))] * n)
    sign = field.element((-1) ** n)
    assert zp_full_sum(f) == field.mul(sign, grid_weighted_sum(f, full))
    # and the coefficient form within the degree window
    assert field.mul(sign, zp_full_sum(f)) == f.coefficient_of((p - 1,) * n)


def test_zp_full_sum_validation():
    with pytest.raises(FieldMismatch):
        zp_full_sum(parse_poly("x1", Q))
    with pytest.raises(GridTooLarge):
        zp_full_sum(parse_poly("x1*x2*x3", F7, 3), max_points=300)


@given(seed=st.integers(0, 10_000))
@settings(max_examples=60)
def test_signed_two_element_sum_consistency(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    sets = [sorted(rng.sample(range(-5, 6), 2)) for _ in range(n)]
    terms = oracles.random_terms_q(rng, n, max_total=n + 2)
    f = MultiPoly(Q, n, terms)
    grid = Grid(Q, sets)
    signed = signed_two_element_sum(f, grid)
    denom = Fraction(1)
    for lo, hi in grid.sets:
        denom *= lo - hi
    assert signed == grid_weighted_sum(f, grid) * denom


def test_signed_sum_needs_pairs():
    f = parse_poly("x1", F5, 1)
    with pytest.raises(BadGridShape):
        signed_two_element_sum(f, Grid(F5, [[0, 1, 2]]))


# --------------------------------------------------------- second nonvanishing


def test_second_nonvanish_lists_hits():
    f = parse_poly("x1*x2", F3, 2)
    hits = second_nonvanish(f, Grid(F3, [[0, 1], [0, 1]]))
    assert [h.value for h in hits] == [(1, 1)]
    # degree 2 equals the bound here, so a single hit is legitimate

    low = parse_poly("x1 + x2", F3, 2)  # degree 1 < bound 2: never one hit
    hits = second_nonvanish(low, Grid(F3, [[0, 1], [0, 1]]))
    assert [h.value for h in hits] == [(0, 1), (1, 0), (1, 1)]

    zero = parse_poly("0", F3, 2)
    assert second_nonvanish(zero, Grid(F3, [[0, 1], [0, 1]])) == []


def test_second_nonvanish_guard_trips_on_inconsistency():
    # a deliberately lying polynomial: claims degree 1 but evaluates nonzero
    # at exactly one grid point, which the vanishing identity forbids
    class LyingPoly(MultiPoly):
        def evaluate(self, point):
            return 1 if tuple(point) == (1, 1) else 0

    liar = LyingPoly(F3, 2, {(1, 0): 1})
    with pytest.raises(TheoremViolation):
        second_nonvanish(liar, Grid(F3, [[0, 1], [0, 1]]))


# -------------------------------------------------------------- fault injection


def test_fault_injection_breaks_the_identity():
    # over Z_5 the doubled denominators scale the sum by 4^-1 = 4 != 1
    f = parse_poly("x1*x2", F5, 2)
    grid = Grid(F5, [[0, 1], [0, 1]])
    set_fault_injection(1)
    try:
        assert grid_weighted_sum(f, grid) != f.coefficient_of((1, 1))
    finally:
        set_fault_injection(0)
    assert grid_weighted_sum(f, grid) == f.coefficient_of((1, 1))
