"""Witness-producing solvers for the classical coefficient-identity applications.

Each solver validates the hypotheses of the theorem it executes, searches in a
fixed deterministic order, and re-checks any witness before returning it.
Wherever a theorem guarantees existence unconditionally, failure to find a
witness raises TheoremViolation rather than returning None: such a failure
can only mean the arithmetic is broken.

Witness ordering convention: searches enumerate candidates so that the first
hit is the lexicographically smallest witness, reading a witness as its
sorted index (or position-by-position value) sequence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    ArityMismatch,
    BadCount,
    BadGridShape,
    BadInput,
    BadLength,
    EmptyInput,
    FieldMismatch,
    GridTooLarge,
    HypothesisViolated,
    MonochromaticInput,
    NotPrime,
    OddCycle,
    RequiresDistinctSets,
    ResourceLimit,
    SizeMismatch,
    TheoremViolation,
)
from .field import PrimeField, RationalField, Scalar, is_prime
from .mpoly import MultiPoly
from .nullstellensatz import (
    Grid,
    _weighted_sum_of_values,
    grid_weighted_sum,
    resolve_max_points,
)


def _binom_mod(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k) % p


# ----------------------------------------------------------- polynomial systems


@dataclass(frozen=True)
class PolySystem:
    """A finite family of polynomials over one prime field, shared arity."""

    field: PrimeField
    n_vars: int
    polys: tuple[MultiPoly, ...]

    def __init__(self, field: PrimeField, n_vars: int, polys: Iterable[MultiPoly] = ()):
        if not isinstance(field, PrimeField):
            raise FieldMismatch("polynomial systems are defined over a prime field")
        if not isinstance(n_vars, int) or isinstance(n_vars, bool) or n_vars < 1:
            raise ArityMismatch(f"n_vars must be a positive integer, got {n_vars!r}")
        polys = tuple(polys)
        for f in polys:
            if f.field != field:
                raise FieldMismatch(f"system over {field!r} contains {f.field!r} member")
            if f.n_vars != n_vars:
                raise ArityMismatch(
                    f"system in {n_vars} variables contains a {f.n_vars}-variable member"
                )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "polys", polys)


def chevalley_g(system: PolySystem) -> MultiPoly:
    """The product of (f_j^(p-1) - 1); empty systems give the constant 1.

    At a common root every factor is -1; anywhere else some f_j is nonzero,
    its (p-1)-th power is 1 by Fermat, and the product vanishes.
    """
    p = system.field.p
    g = MultiPoly.constant(system.field, system.n_vars, system.field.one)
    for f in system.polys:
        g = g * (f ** (p - 1) - 1)
    return g


def common_roots(
    system: PolySystem, max_points: int | None = None
) -> list[tuple[int, ...]]:
    """All points of Z_p^n where every member vanishes, in ascending order.

    When the degrees of the nonzero members sum below n, the count must be
    divisible by p (and in particular cannot be 1); a violation raises
    TheoremViolation.  Zero polynomials impose no constraint and are excluded
    from the degree sum: their formal degree of -infinity would otherwise
    claim the divisibility guarantee for systems it does not cover.
    """
    fld = system.field
    cap = resolve_max_points(max_points)
    if fld.p ** system.n_vars > cap:
        raise GridTooLarge(f"Z_{fld.p}^{system.n_vars} exceeds the {cap}-point cap")
    roots = []
    for point in itertools.product(range(fld.p), repeat=system.n_vars):
        if all(fld.is_zero(f.evaluate(point)) for f in system.polys):
            roots.append(point)
    degree_sum = sum(f.total_degree() for f in system.polys if f.terms)
    if degree_sum < system.n_vars:
        if len(roots) % fld.p != 0 or len(roots) == 1:
            raise TheoremViolation(
                "Chevalley-Warning root count violated: degree sum "
                f"{degree_sum} < {system.n_vars} but {len(roots)} common roots "
                f"found over Z_{fld.p}"
            )
    return roots


# -------------------------------------------------------------------- sumsets


def _as_residue_set(field: PrimeField, elements: Sequence[int], name: str) -> tuple[int, ...]:
    if not isinstance(field, PrimeField):
        raise FieldMismatch("sumsets are defined over a prime field")
    out = sorted({field.element(x) for x in elements})
    if not out:
        raise EmptyInput(f"set {name} is empty")
    return tuple(out)


def sumset(field: PrimeField, a_set: Sequence[int], b_set: Sequence[int]) -> tuple[int, ...]:
    """A + B = {x + y : x in A, y in B} in Z_p, sorted."""
    a = _as_residue_set(field, a_set, "A")
    b = _as_residue_set(field, b_set, "B")
    return tuple(sorted({field.add(x, y) for x in a for y in b}))


def restricted_sumset(
    field: PrimeField, a_set: Sequence[int], b_set: Sequence[int]
) -> tuple[int, ...]:
    """A +' B = {x + y : x in A, y in B, x != y} in Z_p, sorted."""
    a = _as_residue_set(field, a_set, "A")
    b = _as_residue_set(field, b_set, "B")
    return tuple(sorted({field.add(x, y) for x in a for y in b if x != y}))


@dataclass(frozen=True)
class SumsetReport:
    """Outcome of a sumset lower-bound check, with optional certificate."""

    kind: str
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    result: tuple[int, ...]
    bound: int
    satisfied: bool
    certificate: Optional[int] = None


def cauchy_davenport_check(
    field: PrimeField, a_set: Sequence[int], b_set: Sequence[int]
) -> SumsetReport:
    """|A + B| >= min(|A| + |B| - 1, p), with a coefficient certificate.

    When |A| + |B| - 1 <= p the certificate replays the contradiction behind
    the bound: pick any C' of size |A| + |B| - 2 (here: the first elements of
    A + B), form f = prod_{c in C'}(x + y - c), and extract the coefficient of
    x^(|A|-1) y^(|B|-1) via the weighted sum over A x B.  It must equal the
    binomial C(|A|+|B|-2, |A|-1), which has no factor p.  Were A + B contained
    in such a C', f would vanish on the whole grid and the sum would be 0.
    """
    a = _as_residue_set(field, a_set, "A")
    b = _as_residue_set(field, b_set, "B")
    result = sumset(field, a, b)
    p = field.p
    bound = min(len(a) + len(b) - 1, p)
    satisfied = len(result) >= bound
    if not satisfied:
        raise TheoremViolation(
            f"Cauchy-Davenport bound violated: |A+B| = {len(result)} < {bound} "
            f"for A = {a}, B = {b} over Z_{p}"
        )
    certificate = None
    if len(a) + len(b) - 1 <= p:
        m = len(a) + len(b) - 2
        expected = _binom_mod(m, len(a) - 1, p)
        c_prime = result[:m]
        f = MultiPoly.constant(field, 2, field.one)
        x = MultiPoly.variable(field, 2, 0)
        y = MultiPoly.variable(field, 2, 1)
        for c in c_prime:
            f = f * (x + y - c)
        actual = grid_weighted_sum(f, Grid(field, [a, b]))
        if actual != expected or actual == 0:
            raise TheoremViolation(
                "Cauchy-Davenport certificate mismatch: weighted sum gave "
                f"{actual}, binomial C({m},{len(a) - 1}) mod {p} is {expected}"
            )
        certificate = actual
    return SumsetReport("cauchy-davenport", a, b, result, bound, satisfied, certificate)


def erdos_heilbronn_check(
    field: PrimeField, a_set: Sequence[int], b_set: Sequence[int] | None = None
) -> SumsetReport:
    """Restricted-sumset lower bounds.

    One-set form (b_set omitted): |A +' A| >= min(2|A| - 3, p).
    Two-set form: for A != B, |A +' B| >= min(|A| + |B| - 2, p).
    The certificate is the difference C(a+b-3, a-2) - C(a+b-3, a-1) mod p,
    the top coefficient of (x - y) * prod(x + y - c); it is nonzero exactly
    because the set sizes differ (the one-set form is reduced to the pair
    (A minus its least element, A), whose sizes always differ).
    """
    a = _as_residue_set(field, a_set, "A")
    p = field.p
    if b_set is None:
        result = restricted_sumset(field, a, a)
        bound = min(2 * len(a) - 3, p)
        kind = "erdos-heilbronn-self"
        b = a
        cert_a, cert_b = len(a) - 1, len(a)
        cert_ok = len(a) >= 2 and cert_a + cert_b - 3 <= p - 1
    else:
        b = _as_residue_set(field, b_set, "B")
        if a == b:
            raise RequiresDistinctSets("the two-set form needs A != B")
        result = restricted_sumset(field, a, b)
        bound = min(len(a) + len(b) - 2, p)
        kind = "erdos-heilbronn"
        cert_a, cert_b = len(a), len(b)
        cert_ok = cert_a != cert_b and cert_a + cert_b >= 3 and cert_a + cert_b - 3 <= p - 1
    satisfied = len(result) >= bound
    if not satisfied:
        raise TheoremViolation(
            f"Erdos-Heilbronn bound violated: |{kind}| = {len(result)} < {bound} "
            f"for A = {a}, B = {b} over Z_{p}"
        )
    certificate = None
    if cert_ok:
        m = cert_a + cert_b - 3
        value = (_binom_mod(m, cert_a - 2, p) - _binom_mod(m, cert_a - 1, p)) % p
        if value == 0:
            raise TheoremViolation(
                f"Erdos-Heilbronn certificate vanished: C({m},{cert_a - 2}) - "
                f"C({m},{cert_a - 1}) = 0 mod {p} despite unequal sizes"
            )
        certificate = value
    return SumsetReport(kind, a, b, result, bound, satisfied, certificate)


# ------------------------------------------------------------------- zero sums


def egz_solve(nums: Sequence[int], p: int) -> tuple[int, ...]:
    """Erdos-Ginzburg-Ziv: among 2p - 1 integers, p of them sum to 0 mod p.

    Returns the lexicographically smallest index set, found greedily against
    a suffix feasibility table (exact count, residue target).
    """
    if not is_prime(p):
        raise NotPrime(f"EGZ needs a prime modulus, got {p!r}")
    nums = list(nums)
    m = 2 * p - 1
    if len(nums) != m:
        raise BadLength(f"EGZ needs exactly {m} integers for p = {p}, got {len(nums)}")
    res = [x % p for x in nums]

    # feas[i][c][r]: some c-subset of indices i.. has residue sum r
    feas = [[[False] * p for _ in range(p + 1)] for _ in range(m + 1)]
    feas[m][0][0] = True
    for i in range(m - 1, -1, -1):
        for c in range(p + 1):
            for r in range(p):
                ok = feas[i + 1][c][r]
                if not ok and c >= 1:
                    ok = feas[i + 1][c - 1][(r - res[i]) % p]
                feas[i][c][r] = ok

    chosen: list[int] = []
    need, target = p, 0
    for i in range(m):
        if need and feas[i + 1][need - 1][(target - res[i]) % p]:
            chosen.append(i)
            need -= 1
            target = (target - res[i]) % p
        if not need:
            break
    if need or sum(nums[i] for i in chosen) % p != 0:
        raise TheoremViolation(
            f"EGZ guarantee violated: no p-subset with zero sum among {nums} mod {p}"
        )
    return tuple(chosen)


def olson_solve(
    vectors: Sequence[Sequence[int]], p: int, k: int | None = None
) -> Optional[tuple[int, ...]]:
    """Nonempty subset of vectors in Z_p^k summing to zero, if one exists.

    Any family of k(p - 1) + 1 or more vectors must contain one (Davenport
    constant of Z_p^k); below that threshold None is a legitimate answer.
    Returns the lexicographically smallest index subset.
    """
    if not is_prime(p):
        raise NotPrime(f"zero-sum search needs a prime modulus, got {p!r}")
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return None
    if k is None:
        k = len(vecs[0])
    if k < 1:
        raise BadInput(f"dimension must be >= 1, got {k}")
    for v in vecs:
        if len(v) != k:
            raise SizeMismatch(f"vector {v} does not have dimension {k}")
    if p**k > (1 << 20):
        raise ResourceLimit(f"state space Z_{p}^{k} too large to search")
    vecs = [tuple(x % p for x in v) for v in vecs]
    m = len(vecs)
    zero = (0,) * k

    def vadd(s: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a + b) % p for a, b in zip(s, v))

    # reach[i]: subset sums of the suffix i.. (nonempty_reach: nonempty subsets)
    reach: list[set] = [set() for _ in range(m + 1)]
    nonempty_reach: list[set] = [set() for _ in range(m + 1)]
    reach[m] = {zero}
    for i in range(m - 1, -1, -1):
        shifted = {vadd(s, vecs[i]) for s in reach[i + 1]}
        reach[i] = reach[i + 1] | shifted
        nonempty_reach[i] = nonempty_reach[i + 1] | shifted

    if zero not in nonempty_reach[0]:
        if m >= k * (p - 1) + 1:
            raise TheoremViolation(
                f"Davenport bound violated: {m} >= {k * (p - 1) + 1} vectors in "
                f"Z_{p}^{k} admit no nonempty zero-sum subset"
            )
        return None

    chosen: list[int] = []
    state = zero
    for i in range(m):
        nxt = vadd(state, vecs[i])
        # completion may be empty once something is chosen
        want = tuple((-x) % p for x in nxt)
        if want in reach[i + 1]:
            chosen.append(i)
            state = nxt
            if state == zero:
                break
    if not chosen or state != zero:
        raise TheoremViolation("zero-sum reconstruction lost a known witness")
    return tuple(chosen)


def olson_lower_witness(k: int, p: int) -> tuple[tuple[int, ...], ...]:
    """k(p - 1) vectors with no nonempty zero-sum subset: each basis vector
    of Z_p^k repeated p - 1 times."""
    if not is_prime(p):
        raise NotPrime(f"need a prime modulus, got {p!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise BadInput(f"dimension must be a positive integer, got {k!r}")
    out = []
    for i in range(k):
        basis = tuple(1 if j == i else 0 for j in range(k))
        out.extend([basis] * (p - 1))
    return tuple(out)


# ------------------------------------------------------------ plane coverings


@dataclass(frozen=True)
class PlaneSet:
    """Affine planes a*x + b*y + c*z + d = 0 with integer coefficients."""

    planes: tuple[tuple[int, int, int, int], ...]

    def __init__(self, planes: Iterable[Sequence[int]]):
        canon = []
        for raw in planes:
            t = tuple(raw)
            if len(t) != 4 or any(not isinstance(x, int) or isinstance(x, bool) for x in t):
                raise BadInput(f"a plane is 4 integers (a, b, c, d), got {raw!r}")
            if t[0] == 0 and t[1] == 0 and t[2] == 0:
                raise BadInput(f"degenerate plane {t}: a, b, c all zero")
            canon.append(t)
        object.__setattr__(self, "planes", tuple(canon))

    def __len__(self) -> int:
        return len(self.planes)


@dataclass(frozen=True)
class PlaneCoverReport:
    covers: bool
    origin_free: bool
    missed: tuple[tuple[int, int, int], ...]


def plane_cover_construct(n: int) -> PlaneSet:
    """3n planes avoiding the origin and covering the rest of {0..n}^3:
    x = a, y = a, z = a for a = 1..n.  No smaller origin-free family works."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadInput(f"n must be a positive integer, got {n!r}")
    planes = []
    for axis in range(3):
        for a in range(1, n + 1):
            coeffs = [0, 0, 0, -a]
            coeffs[axis] = 1
            planes.append(tuple(coeffs))
    return PlaneSet(planes)


def plane_cover_verify(planes: PlaneSet, n: int) -> PlaneCoverReport:
    """Check coverage of {0..n}^3 minus the origin.

    Any origin-free family of fewer than 3n planes must miss a point; if one
    ever covered everything, that would contradict the lower bound and
    TheoremViolation is raised.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadInput(f"n must be a positive integer, got {n!r}")
    origin_free = all(d != 0 for (_, _, _, d) in planes.planes)
    missed = []
    for point in itertools.product(range(n + 1), repeat=3):
        if point == (0, 0, 0):
            continue
        x, y, z = point
        if not any(a * x + b * y + c * z + d == 0 for (a, b, c, d) in planes.planes):
            missed.append(point)
    covers = not missed
    if origin_free and len(planes) < 3 * n and covers:
        raise TheoremViolation(
            f"plane covering lower bound violated: {len(planes)} < {3 * n} "
            "origin-free planes covered every other point"
        )
    return PlaneCoverReport(covers, origin_free, tuple(missed))


# ------------------------------------------------------------- cycle labeling


@dataclass(frozen=True)
class CycleLabels:
    """A two-element label set per vertex of a cycle, each pair sorted."""

    pairs: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, pairs: Iterable[Sequence]):
        canon = []
        for i, raw in enumerate(pairs):
            t = tuple(Fraction(x) for x in raw)
            if len(t) != 2:
                raise BadGridShape(f"vertex {i} needs exactly 2 labels, got {raw!r}")
            if t[0] == t[1]:
                raise BadInput(f"vertex {i} has equal labels {t[0]}")
            canon.append((min(t), max(t)))
        if not canon:
            raise EmptyInput("a cycle needs at least one vertex")
        object.__setattr__(self, "pairs", tuple(canon))

    def __len__(self) -> int:
        return len(self.pairs)


def cycle_selection(
    labels: CycleLabels, force_search: bool = False
) -> Optional[tuple[Fraction, ...]]:
    """Pick one label per vertex of the cycle so neighbors always differ.

    Guaranteed possible for an even cycle (the coefficient of x_1*...*x_n in
    prod(x_i - x_{i+1}) is 2, which is nonzero).  Odd cycles are rejected
    unless force_search is set, in which case None reports a fruitless search.
    Returns the lexicographically smallest selection, vertex by vertex.
    """
    n = len(labels)
    if n % 2 == 1 and not force_search:
        raise OddCycle(f"cycle length {n} is odd; pass force_search to try anyway")
    chosen: list[Fraction] = []

    def ok(i: int, v: Fraction) -> bool:
        if i > 0 and chosen[i - 1] == v:
            return False
        if i == n - 1:
            # the cycle closes here; a 1-cycle makes a vertex its own neighbor
            if n == 1 or chosen[0] == v:
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for v in labels.pairs[i]:
            if ok(i, v):
                chosen.append(v)
                if backtrack(i + 1):
                    return True
                chosen.pop()
        return False

    if backtrack(0):
        witness = tuple(chosen)
        if any(witness[i] == witness[(i + 1) % n] for i in range(n)):
            raise TheoremViolation("cycle selection produced equal neighbors")
        return witness
    if n % 2 == 0:
        raise TheoremViolation(
            f"even-cycle selection guarantee violated for labels {labels.pairs}"
        )
    return None


def cycle_selection_certificate(labels: CycleLabels) -> Fraction:
    """Recompute the coefficient of x_1*...*x_n in prod(x_i - x_{i+1}) as the
    alternating sum of the factored product over the label pairs, divided by
    prod(a_i0 - a_i1); direct expansion is the independent second route.

    Must equal 2 for an even cycle, independently of the labels.  The two
    routes share nothing but scalar arithmetic: the first never expands the
    product, the second never evaluates it.
    """
    n = len(labels)
    if n % 2 == 1:
        raise OddCycle(f"certificate is for even cycles, got length {n}")
    if n > 10:
        raise ResourceLimit(f"certificate recomputation capped at 10 vertices, got {n}")
    signed = Fraction(0)
    for selector in itertools.product((0, 1), repeat=n):
        point = [labels.pairs[i][s] for i, s in enumerate(selector)]
        value = Fraction(1)
        for i in range(n):
            value *= point[i] - point[(i + 1) % n]
        signed += -value if sum(selector) % 2 else value
    denom = Fraction(1)
    for lo, hi in labels.pairs:
        denom *= lo - hi
    via_sum = signed / denom
    fld = RationalField()
    f = MultiPoly.constant(fld, n, fld.one)
    for i in range(n):
        xi = MultiPoly.variable(fld, n, i)
        xj = MultiPoly.variable(fld, n, (i + 1) % n)
        f = f * (xi - xj)
    via_expansion = f.coefficient_of((1,) * n)
    if via_sum != via_expansion or via_sum != 2:
        raise TheoremViolation(
            f"even-cycle coefficient must be 2: alternating sum gave {via_sum}, "
            f"expansion gave {via_expansion}"
        )
    return via_sum


# ------------------------------------------------------------- regular graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n_vertices-1, edges sorted."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n_vertices: int, edges: Iterable[Sequence[int]]):
        if not isinstance(n_vertices, int) or isinstance(n_vertices, bool) or n_vertices < 1:
            raise BadInput(f"vertex count must be a positive integer, got {n_vertices!r}")
        seen = set()
        canon = []
        for raw in edges:
            e = tuple(raw)
            if len(e) != 2:
                raise BadInput(f"an edge is a pair of vertices, got {raw!r}")
            u, v = e
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
                raise BadInput(f"edge endpoints must be integers, got {raw!r}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise BadInput(f"edge {e} references a vertex outside 0..{n_vertices - 1}")
            if u == v:
                raise BadInput(f"loop at vertex {u} not allowed")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise BadInput(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def degrees(self) -> list[int]:
        out = [0] * self.n_vertices
        for u, v in self.edges:
            out[u] += 1
            out[v] += 1
        return out


_DP_STATE_CAP = 1 << 18


def regular_subgraph_find(
    graph: Graph, p: int, force_search: bool = False, max_edges: int = 24
) -> Optional[tuple[tuple[int, int], ...]]:
    """Find a nonempty edge subset whose induced subgraph is p-regular.

    Hypotheses (checked unless force_search): every degree < 2p and average
    degree > 2p - 2.  Under them a nonempty selection exists whose vertex
    degrees are all 0 mod p; sub-2p degrees then force exactly p on touched
    vertices.  The search walks edge subsets in increasing bitmask order over
    the sorted edge list (bit j = edge j) and returns the first hit, i.e. the
    numerically smallest such bitmask; a residue-state table prunes the walk
    without changing which subset is found first.
    """
    if not is_prime(p):
        raise NotPrime(f"need a prime p, got {p!r}")
    m = len(graph.edges)
    if m > max_edges:
        raise GridTooLarge(f"{m} edges exceeds the search cap of {max_edges}")
    degrees = graph.degrees()
    if not force_search:
        too_big = [v for v, d in enumerate(degrees) if d >= 2 * p]
        if too_big:
            raise HypothesisViolated(
                f"vertex {too_big[0]} has degree {degrees[too_big[0]]} >= 2p = {2 * p}"
            )
        if 2 * m <= (2 * p - 2) * graph.n_vertices:
            raise HypothesisViolated(
                f"average degree {2 * m}/{graph.n_vertices} is not above 2p - 2 = {2 * p - 2}"
            )
    hypotheses_hold = all(d < 2 * p for d in degrees) and 2 * m > (2 * p - 2) * graph.n_vertices

    active = [v for v, d in enumerate(degrees) if d > 0]
    slot = {v: i for i, v in enumerate(active)}
    mask = None
    if active and all(d < 2 * p for d in degrees) and p ** len(active) <= _DP_STATE_CAP:
        mask = _min_mask_zero_degrees(graph.edges, slot, p)
    elif active:
        mask = _scan_exact_degrees(graph.edges, slot, p)

    if mask is None:
        if hypotheses_hold:
            raise TheoremViolation(
                f"regular-subgraph guarantee violated: degrees {degrees} admit no "
                f"{p}-regular edge subset"
            )
        return None

    selected = tuple(graph.edges[j] for j in range(m) if mask >> j & 1)
    sub = [0] * graph.n_vertices
    for u, v in selected:
        sub[u] += 1
        sub[v] += 1
    if not selected or any(d not in (0, p) for d in sub):
        raise TheoremViolation(
            f"selected edge subset {selected} is not {p}-regular on its support"
        )
    return selected


def _min_mask_zero_degrees(edges, slot, p) -> Optional[int]:
    """Smallest nonzero bitmask giving every vertex degree 0 mod p.

    States are degree-residue vectors; a state's first recorded mask is its
    minimum, because masks produced later always carry a higher bit.
    """
    width = len(slot)
    zero = (0,) * width
    dp: dict[tuple[int, ...], int] = {zero: 0}
    for j, (u, v) in enumerate(edges):
        iu, iv = slot[u], slot[v]
        need = tuple(
            (p - 1) if i in (iu, iv) else 0 for i in range(width)
        )
        if need in dp:
            return dp[need] | (1 << j)
        bit = 1 << j
        fresh = {}
        for s, msk in dp.items():
            t = list(s)
            t[iu] = (t[iu] + 1) % p
            t[iv] = (t[iv] + 1) % p
            t = tuple(t)
            if t not in dp and (t not in fresh or fresh[t] > msk | bit):
                fresh[t] = msk | bit
        dp.update(fresh)
    return None


def _scan_exact_degrees(edges, slot, p) -> Optional[int]:
    """Plain ascending scan of edge subsets for degrees exactly 0 or p."""
    width = len(slot)
    m = len(edges)
    for mask in range(1, 1 << m):
        degs = [0] * width
        bits = mask
        while bits:
            j = (bits & -bits).bit_length() - 1
            u, v = edges[j]
            degs[slot[u]] += 1
            degs[slot[v]] += 1
            bits &= bits - 1
        if all(d in (0, p) for d in degs):
            return mask
    return None


# ------------------------------------------------------- distinct-sum shuffles


def snevily_solve(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Snevily-type pairing in Z_p, p an odd prime.

    Given a_1..a_k (arbitrary) and pairwise distinct b_1..b_k with k < p,
    returns the lexicographically smallest permutation sigma (1-based, as
    positions into b) making a_i + b_sigma(i) pairwise distinct.  Existence
    is guaranteed, so exhausting the search raises TheoremViolation.
    """
    if not is_prime(p) or p == 2:
        raise BadInput(f"need an odd prime, got {p!r}")
    if len(a) != len(b):
        raise SizeMismatch(f"{len(a)} left elements vs {len(b)} right elements")
    k = len(a)
    if k < 1:
        raise EmptyInput("need at least one element per side")
    if k >= p:
        raise BadInput(f"need k < p, got k = {k}, p = {p}")
    ares = [x % p for x in a]
    bres = [x % p for x in b]
    if len(set(bres)) != k:
        raise BadInput("right-side elements must be pairwise distinct mod p")

    perm = _distinct_sum_permutation(ares, bres, p)
    if perm is None:
        raise TheoremViolation(
            f"Snevily guarantee violated for a = {ares}, b = {bres} over Z_{p}"
        )
    return perm


def snevily_mod_n(
    a: Sequence[int], n: int, force_search: bool = False
) -> Optional[tuple[int, ...]]:
    """Permutation sigma of {1..k} with a_i + sigma(i) pairwise distinct mod n.

    Guaranteed whenever 2k <= n + 1; inputs beyond that are rejected unless
    force_search is set, in which case None reports a fruitless search.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadInput(f"modulus must be a positive integer, got {n!r}")
    k = len(a)
    if k < 1:
        raise EmptyInput("need at least one element")
    hypothesis = 2 * k <= n + 1
    if not hypothesis and not force_search:
        raise BadInput(f"need 2k <= n + 1, got k = {k}, n = {n}")
    ares = [x % n for x in a]
    perm = _distinct_sum_permutation(ares, list(range(1, k + 1)), n)
    if perm is None:
        if hypothesis:
            raise TheoremViolation(
                f"distinct-sum guarantee violated for a = {ares} mod {n}"
            )
        return None
    return perm


def _distinct_sum_permutation(
    a: list[int], b: list[int], modulus: int
) -> Optional[tuple[int, ...]]:
    """Backtracking core: smallest sigma with a_i + b[sigma(i)-1] distinct."""
    k = len(a)
    used_pos = [False] * k
    used_val: set[int] = set()
    sigma: list[int] = []

    def backtrack(i: int) -> bool:
        if i == k:
            return True
        for j in range(k):
            if used_pos[j]:
                continue
            val = (a[i] + b[j]) % modulus
            if val in used_val:
                continue
            used_pos[j] = True
            used_val.add(val)
            sigma.append(j + 1)
            if backtrack(i + 1):
                return True
            sigma.pop()
            used_val.remove(val)
            used_pos[j] = False
        return False

    if backtrack(0):
        return tuple(sigma)
    return None


# --------------------------------------------------- Vandermonde-squared check


def vandermonde_sq_coefficient(k: int, verify: bool = True) -> int:
    """Coefficient of (x_1*...*x_k)^(k-1) in the squared Vandermonde product
    prod_{i<j}(x_j - x_i)^2, namely k! * (-1)^C(k,2).

    With verify (capped at k <= 6), the closed form is checked against direct
    expansion and against the weighted sum over the rational grid {0..k-1}^k,
    where the factored form is evaluated pointwise so the two routes share
    nothing but the arithmetic core.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise BadInput(f"k must be a positive integer, got {k!r}")
    closed = math.factorial(k) * (-1) ** (k * (k - 1) // 2)
    if not verify:
        return closed
    if k > 6:
        raise ResourceLimit(f"verification paths are capped at k <= 6, got {k}")
    fld = RationalField()
    vandermonde = MultiPoly.constant(fld, k, fld.one)
    for i in range(k):
        for j in range(i + 1, k):
            xi = MultiPoly.variable(fld, k, i)
            xj = MultiPoly.variable(fld, k, j)
            vandermonde = vandermonde * (xj - xi)
    squared = vandermonde * vandermonde
    via_expansion = squared.coefficient_of((k - 1,) * k)

    def squared_at(point: tuple[Scalar, ...]) -> Fraction:
        out = Fraction(1)
        for i in range(k):
            for j in range(i + 1, k):
                out *= (point[j] - point[i]) ** 2
        return out

    grid = Grid(fld, [list(range(k))] * k)
    via_grid = _weighted_sum_of_values(squared_at, grid)
    if not (via_expansion == closed and via_grid == closed):
        raise TheoremViolation(
            f"Vandermonde-squared coefficient disagreement at k = {k}: closed form "
            f"{closed}, expansion {via_expansion}, grid sum {via_grid}"
        )
    return closed


# ------------------------------------------------------- symmetric differences


def symdiff_check(
    sets: Sequence[Iterable], colors: Sequence
) -> set[frozenset]:
    """Distinct symmetric differences across a two-coloring of 2^n + 1 sets.

    Checks the lower bound: at least 2^n pairwise distinct symmetric
    differences of opposite-colored sets.  Each color class must consist of
    pairwise distinct sets (the same set may appear once per color); with a
    repeat inside one class the bound is simply false -- three copies of one
    set leave a single empty difference -- so such input is rejected.  Within
    the stated hypotheses the bound is a theorem and a shortfall raises
    TheoremViolation.  Returns the set of differences.
    """
    families = [frozenset(s) for s in sets]
    count = len(families)
    if len(colors) != count:
        raise SizeMismatch(f"{count} sets but {len(colors)} colors")
    n = (count - 1).bit_length() - 1
    if count < 2 or count != (1 << n) + 1:
        raise BadCount(f"need 2^n + 1 sets for some n >= 0, got {count}")
    palette = sorted(set(colors), key=repr)
    if len(palette) == 1:
        raise MonochromaticInput("both colors must be present")
    if len(palette) != 2:
        raise BadInput(f"need exactly two colors, got {len(palette)}")
    first = [s for s, c in zip(families, colors) if c == palette[0]]
    second = [s for s, c in zip(families, colors) if c == palette[1]]
    for label, cls in zip(palette, (first, second)):
        if len(set(cls)) != len(cls):
            raise BadInput(f"color {label!r} repeats a set; classes must be distinct")
    diffs = {s ^ t for s in first for t in second}
    if len(diffs) < (1 << n):
        raise TheoremViolation(
            f"symmetric-difference lower bound violated: {len(diffs)} < {1 << n} "
            f"distinct differences across the coloring"
        )
    return diffs
