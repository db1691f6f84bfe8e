"""Weighted grid sums and the coefficient identities behind them.

For finite sets A_1, ..., A_n in a field, write d_i = |A_i| - 1 and, for
a in A_i, let ``denom(A_i, a)`` be the product of (a - b) over b in A_i other
than a (the Lagrange denominator).  The weight of a grid point alpha is the
product P(alpha) of its coordinate denominators.  The central facts executed
here, for f a polynomial in n variables:

* if ``total_degree(f) < d_1 + ... + d_n`` then the sum of f(alpha)/P(alpha)
  over the grid is 0;
* if ``total_degree(f) <= d_1 + ... + d_n`` the same sum equals the
  coefficient of x_1^{d_1} * ... * x_n^{d_n} in f;
* the previous point still holds whenever no monomial of f other than x^d
  dominates d coordinatewise (``is_restricted``), regardless of total degree.

Specializations with their own entry points: sums over all of Z_2^n
(weights are all 1), sums over all of Z_p^n (every weight is (-1)^n by
Wilson's theorem), and alternating sums over two-element grids.

Everything is a pure function of its arguments, so grid enumerations may be
partitioned freely across workers; results never depend on iteration order.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import (
    ArityMismatch,
    BadGridShape,
    BadInput,
    EmptyInput,
    FieldMismatch,
    GridTooLarge,
    NotAMember,
    OutOfRange,
    SizeMismatch,
    TheoremViolation,
)
from .field import FieldSpec, PrimeField, Scalar
from .mpoly import MultiPoly

DEFAULT_MAX_GRID_POINTS = 1 << 24
MAX_GRID_POINTS_ENV = "COMBNULL_MAX_GRID_POINTS"

# Test hook: when nonzero, every Lagrange denominator is scaled by 1 + offset.
# Used by the self-test command to demonstrate that a corrupted arithmetic
# core trips the identity checks loudly.  Never set this in real use.
_FAULT_OFFSET = 0


def set_fault_injection(offset: int) -> None:
    global _FAULT_OFFSET
    _FAULT_OFFSET = int(offset)


def resolve_max_points(override: int | None = None) -> int:
    """Grid-size cap: explicit argument, else environment, else default."""
    if override is not None:
        if override < 1:
            raise BadInput(f"grid point cap must be >= 1, got {override}")
        return override
    env = os.environ.get(MAX_GRID_POINTS_ENV)
    if env is not None:
        try:
            cap = int(env)
        except ValueError as exc:
            raise BadInput(f"{MAX_GRID_POINTS_ENV} must be an integer, got {env!r}") from exc
        if cap < 1:
            raise BadInput(f"{MAX_GRID_POINTS_ENV} must be >= 1, got {cap}")
        return cap
    return DEFAULT_MAX_GRID_POINTS


class Grid:
    """A product A_1 x ... x A_n of finite sets, each stored sorted."""

    __slots__ = ("field", "sets")

    def __init__(self, field: FieldSpec, sets: Sequence[Sequence[Scalar]]):
        if not sets:
            raise EmptyInput("a grid needs at least one coordinate set")
        canon = []
        for i, raw in enumerate(sets):
            elems = sorted(field.element(x) for x in raw)
            if not elems:
                raise EmptyInput(f"coordinate set {i} is empty")
            for a, b in zip(elems, elems[1:]):
                if a == b:
                    raise BadInput(
                        f"coordinate set {i} has repeated element {field.format(a)}"
                    )
            canon.append(tuple(elems))
        self.field = field
        self.sets = tuple(canon)

    @property
    def n_vars(self) -> int:
        return len(self.sets)

    def point_count(self) -> int:
        n = 1
        for s in self.sets:
            n *= len(s)
        return n

    def degree_bound(self) -> int:
        """d_1 + ... + d_n with d_i = |A_i| - 1."""
        return sum(len(s) - 1 for s in self.sets)

    def target_exponents(self) -> tuple[int, ...]:
        return tuple(len(s) - 1 for s in self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return self.field == other.field and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.field, self.sets))

    def __repr__(self) -> str:
        return f"Grid({self.field!r}, {list(map(list, self.sets))!r})"


@dataclass(frozen=True)
class GridPoint:
    """A grid point: per-coordinate indices plus the field values there."""

    index: tuple[int, ...]
    value: tuple[Scalar, ...]


def iter_points(grid: Grid) -> Iterator[GridPoint]:
    """Mixed-radix enumeration of the grid, last coordinate varying fastest."""
    index_ranges = [range(len(s)) for s in grid.sets]
    for idx in itertools.product(*index_ranges):
        yield GridPoint(idx, tuple(grid.sets[i][j] for i, j in enumerate(idx)))


def lagrange_denominator(field: FieldSpec, elements: Sequence[Scalar], a: Scalar) -> Scalar:
    """Product of (a - b) over b != a in the set; nonzero by distinctness."""
    elems = [field.element(x) for x in elements]
    if not elems:
        raise EmptyInput("denominator over an empty set")
    a = field.element(a)
    if a not in elems:
        raise NotAMember(f"{field.format(a)} is not in the set")
    out = field.one
    for b in elems:
        if b != a:
            out = field.mul(out, field.sub(a, b))
    if _FAULT_OFFSET:
        out = field.mul(out, field.element(1 + _FAULT_OFFSET))
    return out


class GridWeights:
    """Per-point weights P(alpha), stored as per-coordinate denominator tables.

    Storage is sum(|A_i|) scalars instead of the full product; P(alpha) and
    1/P(alpha) are reassembled on demand.
    """

    __slots__ = ("grid", "denominators")

    def __init__(self, grid: Grid):
        self.grid = grid
        fld = grid.field
        self.denominators = tuple(
            tuple(lagrange_denominator(fld, s, a) for a in s) for s in grid.sets
        )

    def weight(self, index: Sequence[int]) -> Scalar:
        fld = self.grid.field
        out = fld.one
        for table, j in zip(self.denominators, index):
            out = fld.mul(out, table[j])
        return out

    def inverse_tables(self) -> list[list[Scalar]]:
        fld = self.grid.field
        return [[fld.inv(d) for d in table] for table in self.denominators]


def grid_weights(grid: Grid, max_points: int | None = None) -> GridWeights:
    """Weights for every grid point; refuses grids above the point cap."""
    cap = resolve_max_points(max_points)
    if grid.point_count() > cap:
        raise GridTooLarge(f"grid has {grid.point_count()} points, cap is {cap}")
    return GridWeights(grid)


def weighted_power_sum(field: FieldSpec, elements: Sequence[Scalar], m: int) -> Scalar:
    """Sum of a**m / denom(A, a) over a in A, for 0 <= m <= |A| - 1.

    Equals 0 for m < |A| - 1 and 1 for m = |A| - 1; this is the univariate
    kernel that makes the grid identities work.
    """
    elems = sorted(field.element(x) for x in elements)
    if not elems:
        raise EmptyInput("power sum over an empty set")
    for a, b in zip(elems, elems[1:]):
        if a == b:
            raise BadInput(f"repeated element {field.format(a)}")
    if not isinstance(m, int) or isinstance(m, bool) or not 0 <= m <= len(elems) - 1:
        raise OutOfRange(f"exponent must lie in [0, {len(elems) - 1}], got {m!r}")
    total = field.zero
    for a in elems:
        term = field.div(field.power(a, m), lagrange_denominator(field, elems, a))
        total = field.add(total, term)
    return total


def lagrange_interpolate(
    field: FieldSpec, points: Sequence[Scalar], values: Sequence[Scalar]
) -> MultiPoly:
    """Unique univariate polynomial of degree < len(points) through the data."""
    xs = [field.element(x) for x in points]
    if not xs:
        raise EmptyInput("interpolation needs at least one point")
    if len(set(xs)) != len(xs):
        raise BadInput("interpolation points must be distinct")
    if len(values) != len(xs):
        raise SizeMismatch(f"{len(values)} values for {len(xs)} points")
    ys = [field.element(y) for y in values]
    result = MultiPoly.zero(field, 1)
    for a, fa in zip(xs, ys):
        if field.is_zero(fa):
            continue
        basis = MultiPoly.constant(field, 1, field.one)
        for b in xs:
            if b != a:
                basis = basis * MultiPoly(field, 1, {(1,): field.one, (0,): field.neg(b)})
        scale = field.div(fa, lagrange_denominator(field, xs, a))
        result = result + basis.scale(scale)
    return result


def _check_poly_grid(f: MultiPoly, grid: Grid) -> None:
    if f.field != grid.field:
        raise FieldMismatch(f"polynomial over {f.field!r}, grid over {grid.field!r}")
    if f.n_vars != grid.n_vars:
        raise ArityMismatch(
            f"polynomial in {f.n_vars} variables, grid has {grid.n_vars} coordinates"
        )


def _weighted_sum_of_values(
    value_at: Callable[[tuple[Scalar, ...]], Scalar],
    grid: Grid,
    max_points: int | None = None,
) -> Scalar:
    """Sum of value_at(alpha) / P(alpha) over the grid, by direct enumeration."""
    weights = grid_weights(grid, max_points)
    inv_tables = weights.inverse_tables()
    fld = grid.field
    paired = [list(zip(s, table)) for s, table in zip(grid.sets, inv_tables)]
    total = fld.zero
    for combo in itertools.product(*paired):
        w = fld.one
        for _, inv_d in combo:
            w = fld.mul(w, inv_d)
        point = tuple(v for v, _ in combo)
        total = fld.add(total, fld.mul(value_at(point), w))
    return total


def grid_weighted_sum(f: MultiPoly, grid: Grid, max_points: int | None = None) -> Scalar:
    """Sum of f(alpha)/P(alpha) over the grid.

    Vanishes when total_degree(f) < grid.degree_bound(); equals the
    coefficient of the top monomial x^d when total_degree(f) <= the bound, or
    more generally whenever ``f.is_restricted(grid.target_exponents())``.
    """
    _check_poly_grid(f, grid)
    return _weighted_sum_of_values(f.evaluate, grid, max_points)


def boolean_sum(f: MultiPoly) -> Scalar:
    """Sum of f over all of {0,1}^n; the field must be Z_2.

    Over Z_2 every grid weight is 1, so this is the weighted sum in disguise:
    for total_degree(f) <= n it equals the coefficient of x_1*...*x_n.
    """
    if not isinstance(f.field, PrimeField) or f.field.p != 2:
        raise FieldMismatch("boolean_sum needs a polynomial over Z_2")
    total = 0
    for point in itertools.product((0, 1), repeat=f.n_vars):
        total ^= f.evaluate(point)
    return total


def zp_full_sum(f: MultiPoly, max_points: int | None = None) -> Scalar:
    """Sum of f over all of Z_p^n.

    Every weight of the full grid Z_p^n is (-1)^n by Wilson's theorem, so
    (-1)^n times this sum is the coefficient of x_1^{p-1}*...*x_n^{p-1}
    whenever total_degree(f) <= n(p-1).
    """
    if not isinstance(f.field, PrimeField):
        raise FieldMismatch("zp_full_sum needs a polynomial over a prime field")
    fld = f.field
    cap = resolve_max_points(max_points)
    if fld.p ** f.n_vars > cap:
        raise GridTooLarge(f"Z_{fld.p}^{f.n_vars} exceeds the {cap}-point cap")
    total = fld.zero
    for point in itertools.product(range(fld.p), repeat=f.n_vars):
        total = fld.add(total, f.evaluate(point))
    return total


def signed_two_element_sum(f: MultiPoly, grid: Grid) -> Scalar:
    """Alternating sum over a grid of two-element sets.

    With A_i = {a_i0, a_i1} (sorted, a_i0 < a_i1), returns the sum over all
    selectors s in {0,1}^n of (-1)^(s_1+...+s_n) * f(a_1s_1, ..., a_ns_n).
    Dividing by the product of (a_i0 - a_i1) gives the weighted grid sum: the
    denominator of a_i1 is the negative of the denominator of a_i0, so each
    selector's weight contributes exactly the matching sign.
    """
    _check_poly_grid(f, grid)
    if any(len(s) != 2 for s in grid.sets):
        raise BadGridShape("signed sum needs every coordinate set of size exactly 2")
    fld = f.field
    minus_one = fld.neg(fld.one)
    total = fld.zero
    for selector in itertools.product((0, 1), repeat=grid.n_vars):
        point = tuple(grid.sets[i][s] for i, s in enumerate(selector))
        sign = minus_one if sum(selector) % 2 else fld.one
        total = fld.add(total, fld.mul(sign, f.evaluate(point)))
    return total


def second_nonvanish(
    f: MultiPoly, grid: Grid, max_points: int | None = None
) -> list[GridPoint]:
    """All grid points where f is nonzero, in enumeration order.

    When total_degree(f) < grid.degree_bound() the count can never be exactly
    one: a lone nonvanishing point alpha would make the weighted sum
    f(alpha)/P(alpha) != 0, contradicting the vanishing identity.  A count of
    one in that regime therefore raises TheoremViolation.
    """
    _check_poly_grid(f, grid)
    cap = resolve_max_points(max_points)
    if grid.point_count() > cap:
        raise GridTooLarge(f"grid has {grid.point_count()} points, cap is {cap}")
    hits = [pt for pt in iter_points(grid) if not f.field.is_zero(f.evaluate(pt.value))]
    if len(hits) == 1 and f.total_degree() < grid.degree_bound():
        raise TheoremViolation(
            "vanishing-sum identity violated: a polynomial of total degree "
            f"{f.total_degree()} < {grid.degree_bound()} has exactly one "
            "nonvanishing grid point"
        )
    return hits
