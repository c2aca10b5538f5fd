"""Transitive functions, parallel-path consistency and outer derivations.

A transitive function assigns a ring value to every strictly comparable
pair so that values add along chains.  On cover values alone, that
additivity is equivalent to one linear relation per pair of parallel
cover paths; the signed incidence matrix of those relations decides,
by its rank over a coefficient field, whether every transitive function
is a potential (difference of a vertex function) or outer derivations
exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    InputError,
    NotComparableError,
    PathLimitExceeded,
    UnsupportedRingError,
)
from .linalg import (
    IntegerMatrix,
    Ring,
    kernel_basis,
    mod_ring,
    prime_field,
    rank_from_divisors,
    smith_normal_form,
    solve_linear,
)
from .poset import Poset, _bits

DEFAULT_PATH_LIMIT = 10_000

Edge = tuple[str, str]


@dataclass(frozen=True)
class ParallelPair:
    """Two distinct upward cover paths sharing endpoints."""

    source: str
    target: str
    path_a: tuple[Edge, ...]
    path_b: tuple[Edge, ...]


@dataclass(frozen=True)
class ConsistencyMatrix:
    """Signed incidence of parallel-path relations over the cover edges.

    Row i carries +1 on the edges of ``row_pairs[i].path_a`` and -1 on
    the edges of ``path_b``; an edge on both paths nets 0.
    """

    matrix: IntegerMatrix
    column_edges: tuple[Edge, ...]
    row_pairs: tuple[ParallelPair, ...]


@dataclass(frozen=True)
class CycleWalk:
    """Closed walk of pairwise-comparable consecutive elements."""

    vertices: tuple[str, ...]

    def __post_init__(self):
        v = tuple(self.vertices)
        object.__setattr__(self, "vertices", v)
        if len(v) < 2:
            raise ValueError("a cycle walk needs at least two entries")
        if v[0] != v[-1]:
            raise ValueError("a cycle walk must end where it started")
        for a, b in zip(v, v[1:]):
            if a == b:
                raise ValueError("consecutive walk elements must differ")


class TransitiveFunction:
    """Ring values on every strictly comparable pair, additive on chains."""

    __slots__ = ("poset", "ring", "values")

    def __init__(self, poset: Poset, ring: Ring, values: dict):
        self.poset = poset
        self.ring = ring
        self.values = dict(values)

    def value(self, x: str, y: str):
        try:
            return self.values[(x, y)]
        except KeyError:
            raise NotComparableError(f"{x!r} < {y!r} does not hold") from None

    def cover_values(self) -> dict:
        return {edge: self.values[edge] for edge in self.poset.covers}

    def __repr__(self):
        return (
            f"TransitiveFunction({self.ring.label()}, "
            f"{len(self.values)} pairs)"
        )


def _cover_paths(P: Poset, src: int, dst: int, limit: int):
    """All upward cover-edge paths src -> dst, lexicographic by vertex index."""
    paths: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []

    def walk(vertex):
        if vertex == dst:
            if len(paths) >= limit:
                raise PathLimitExceeded(P.elements[src], P.elements[dst], limit)
            paths.append(tuple(acc))
            return
        for nxt in P.up_covers_idx(vertex):
            if nxt == dst or P.is_less_idx(nxt, dst):
                acc.append((vertex, nxt))
                walk(nxt)
                acc.pop()

    walk(src)
    return paths


def parallel_pairs(P: Poset, path_limit: int = DEFAULT_PATH_LIMIT) -> list[ParallelPair]:
    """One relation per non-reference cover path, for every comparable pair.

    For each (x, z) with x < z the m distinct cover paths yield the m - 1
    pairs (first path, j-th path); differences of those span every
    pairwise relation.
    """
    if path_limit < 1:
        raise ValueError("path_limit must be >= 1")
    out = []
    names = P.elements
    for i in range(P.n):
        for j in _bits(P.above_mask(i)):
            paths = _cover_paths(P, i, j, path_limit)
            if len(paths) < 2:
                continue
            ref = tuple((names[a], names[b]) for a, b in paths[0])
            for other in paths[1:]:
                out.append(
                    ParallelPair(
                        source=names[i],
                        target=names[j],
                        path_a=ref,
                        path_b=tuple((names[a], names[b]) for a, b in other),
                    )
                )
    return out


def consistency_matrix(P: Poset, path_limit: int = DEFAULT_PATH_LIMIT) -> ConsistencyMatrix:
    pairs = parallel_pairs(P, path_limit)
    col = {edge: c for c, edge in enumerate(P.covers)}
    ncols = len(P.covers)
    entries = [0] * (len(pairs) * ncols)
    for r, pair in enumerate(pairs):
        base = r * ncols
        for edge in pair.path_a:
            entries[base + col[edge]] += 1
        for edge in pair.path_b:
            entries[base + col[edge]] -= 1
    return ConsistencyMatrix(
        matrix=IntegerMatrix(len(pairs), ncols, tuple(entries)),
        column_edges=P.covers,
        row_pairs=tuple(pairs),
    )


def der_pot_dims(
    P: Poset, k: Ring, path_limit: int = DEFAULT_PATH_LIMIT
) -> tuple[int, int]:
    """Dimensions of the transitive-function and potential-function spaces.

    der = E - rank_k(consistency matrix), pot = V - C.
    """
    cm = consistency_matrix(P, path_limit)
    rank = rank_from_divisors(smith_normal_form(cm.matrix).divisors, k)
    return len(P.covers) - rank, P.n - P.component_count


def has_outer_derivation(
    P: Poset, k: Ring, path_limit: int = DEFAULT_PATH_LIMIT
) -> bool:
    der, pot = der_pot_dims(P, k, path_limit)
    return der > pot


_FUNCTION_RINGS = ("rationals", "prime_field", "mod_ring")


def from_cover_values(P: Poset, ring: Ring, cover_values: dict):
    """Extend cover values to a transitive function, or None if inconsistent.

    The check walks each upward cone once: a value for (x, z) computed
    through one incoming cover of z must agree with every other incoming
    cover inside the cone.  That edge-wise agreement is equivalent to all
    parallel-path relations, without enumerating paths.
    """
    if ring.tag not in _FUNCTION_RINGS:
        raise UnsupportedRingError(
            f"transitive functions over {ring.label()} are not supported"
        )
    cv: dict[tuple[int, int], object] = {}
    for edge in P.covers:
        if edge not in cover_values:
            raise InputError(f"cover edge {edge!r} has no assigned value")
        cv[(P.index(edge[0]), P.index(edge[1]))] = ring.normalize(cover_values[edge])
    for edge in cover_values:
        lo, hi = edge
        if (P.index(lo), P.index(hi)) not in cv:
            raise InputError(f"pair {edge!r} is not a cover edge")

    names = P.elements
    values: dict[tuple[str, str], object] = {}
    topo = P.topological_order()
    for i in range(P.n):
        local = {i: ring.zero}
        for j in topo:
            if not P.is_less_idx(i, j):
                continue
            val = None
            for w in P.down_covers_idx(j):
                if w == i or P.is_less_idx(i, w):
                    cand = ring.add(local[w], cv[(w, j)])
                    if val is None:
                        val = cand
                    elif cand != val:
                        return None
            local[j] = val
            values[(names[i], names[j])] = val
    return TransitiveFunction(P, ring, values)


def is_potential(f: TransitiveFunction):
    """Vertex potential inducing f, or None when f is an outer derivation.

    Solves phi(y) - phi(x) = f(x, y) over the cover edges in f's ring and
    gauge-fixes the first element of each component to zero; additivity
    then covers every strict pair automatically.
    """
    P = f.poset
    ring = f.ring
    n = P.n
    ncov = len(P.covers)
    if ncov == 0:
        return {x: ring.zero for x in P.elements}

    entries = [0] * (ncov * n)
    rhs = []
    for r, (lo, hi) in enumerate(P.covers):
        entries[r * n + P.index(lo)] = -1
        entries[r * n + P.index(hi)] = 1
        rhs.append(f.values[(lo, hi)])
    a = IntegerMatrix(ncov, n, tuple(entries))

    if ring.tag == "rationals":
        scale = lcm(*(Fraction(v).denominator for v in rhs)) if rhs else 1
        b = [int(Fraction(v) * scale) for v in rhs]
        sol = solve_linear(a, b, ring)
        if sol is None:
            return None
        sol = [v / scale for v in sol]
    else:
        sol = solve_linear(a, [int(v) for v in rhs], ring)
        if sol is None:
            return None

    comp = P.component_ids
    first: dict[int, int] = {}
    for i in range(n):
        first.setdefault(comp[i], i)
    return {
        P.elements[i]: ring.sub(sol[i], sol[first[comp[i]]]) for i in range(n)
    }


def circulation(f: TransitiveFunction, C: CycleWalk):
    """Signed sum of f along a closed walk of comparable steps."""
    P = f.poset
    ring = f.ring
    total = ring.zero
    verts = C.vertices
    for a, b in zip(verts, verts[1:]):
        ia, ib = P.index(a), P.index(b)
        if P.is_less_idx(ia, ib):
            total = ring.add(total, f.values[(a, b)])
        elif P.is_less_idx(ib, ia):
            total = ring.sub(total, f.values[(b, a)])
        else:
            raise NotComparableError(f"{a!r} and {b!r} are not comparable")
    return total


def outer_witness(P: Poset, p: int, path_limit: int = DEFAULT_PATH_LIMIT):
    """A concrete outer derivation over Z/p, or None when none exists.

    Scans the kernel basis of the consistency matrix over GF(p) in
    deterministic order and returns the first member that fails the
    potential test.  Witnesses are not unique.
    """
    k = prime_field(p)
    cm = consistency_matrix(P, path_limit)
    divisors = smith_normal_form(cm.matrix).divisors
    der = len(P.covers) - rank_from_divisors(divisors, k)
    pot = P.n - P.component_count
    if der <= pot:
        return None
    ring = mod_ring(p)
    for vec in kernel_basis(cm.matrix, k):
        assignment = {edge: vec[c] for c, edge in enumerate(cm.column_edges)}
        f = from_cover_values(P, ring, assignment)
        assert f is not None, "kernel vector must satisfy all relations"
        if is_potential(f) is None:
            return f
    raise AssertionError("dimension count guarantees a non-potential kernel vector")
