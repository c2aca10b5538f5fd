"""Finite posets presented by their Hasse diagram, plus order queries.

Conventions used throughout the package:

- A cover pair ``(x, y)`` means ``y`` covers ``x``; pairs point upward.
- Height counts the *elements* of a longest chain: a single point has
  height 1 and every antichain has height 1.
- An isolated element is both minimal and maximal and contributes to both
  counts.
- Input covers must already be transitively reduced; redundant pairs are
  rejected, never dropped silently.  ``transitive_reduction`` performs an
  explicit reduction for callers that want one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    CycleError,
    DuplicateError,
    NotReducedError,
    UnknownElementError,
)


class Relation(Enum):
    """Outcome of comparing two elements."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ShapeStats:
    """Basic counting invariants of a poset.

    ``minimal_count + maximal_count + middle_count`` exceeds
    ``vertex_count`` by exactly the number of isolated elements.
    """

    vertex_count: int
    edge_count: int
    component_count: int
    height: int
    minimal_count: int
    maximal_count: int
    middle_count: int


@dataclass(frozen=True)
class Crown:
    """A two-level cyclic subposet on ``2n`` elements, ``n >= 2``.

    The only comparabilities among the elements are ``lower[i] < upper[i]``
    and ``lower[i] < upper[(i + 1) % n]``.
    """

    lower: tuple[str, ...]
    upper: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.lower)

    def element_set(self) -> frozenset[str]:
        return frozenset(self.lower) | frozenset(self.upper)


def _bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset with precomputed strict-order bitmasks.

    Construction validates the cover list completely: distinct known
    identifiers, no self-pairs or duplicates, acyclic, transitively
    reduced.  All queries afterwards are pure and thread-safe.
    """

    __slots__ = (
        "elements",
        "covers",
        "_index",
        "_above",
        "_below",
        "_up",
        "_down",
        "_topo",
        "_component",
    )

    def __init__(self, elements, covers):
        elems = tuple(elements)
        index: dict[str, int] = {}
        for e in elems:
            if e in index:
                raise DuplicateError(f"duplicate element {e!r}")
            index[e] = len(index)
        n = len(elems)

        pairs = []
        seen: set[tuple[int, int]] = set()
        up: list[list[int]] = [[] for _ in range(n)]
        down: list[list[int]] = [[] for _ in range(n)]
        for pair in covers:
            lo, hi = pair
            if lo not in index:
                raise UnknownElementError(f"unknown element {lo!r} in covers")
            if hi not in index:
                raise UnknownElementError(f"unknown element {hi!r} in covers")
            if lo == hi:
                raise CycleError(f"self-cover on {lo!r}")
            key = (index[lo], index[hi])
            if key in seen:
                raise DuplicateError(f"duplicate cover pair ({lo!r}, {hi!r})")
            seen.add(key)
            pairs.append((lo, hi))
            up[key[0]].append(key[1])
            down[key[1]].append(key[0])
        for lst in up:
            lst.sort()
        for lst in down:
            lst.sort()

        topo = _topological_order(up, down)

        above = [0] * n
        for i in reversed(topo):
            mask = 0
            for j in up[i]:
                mask |= (1 << j) | above[j]
            above[i] = mask
        below = [0] * n
        for i in topo:
            mask = 0
            for j in down[i]:
                mask |= (1 << j) | below[j]
            below[i] = mask

        for lo, hi in pairs:
            i, j = index[lo], index[hi]
            if above[i] & below[j]:
                raise NotReducedError(
                    f"cover pair ({lo!r}, {hi!r}) is implied by a longer chain"
                )

        component = [-1] * n
        next_id = 0
        for start in range(n):
            if component[start] >= 0:
                continue
            stack = [start]
            component[start] = next_id
            while stack:
                cur = stack.pop()
                for nb in up[cur] + down[cur]:
                    if component[nb] < 0:
                        component[nb] = next_id
                        stack.append(nb)
            next_id += 1

        self.elements = elems
        self.covers = tuple(pairs)
        self._index = index
        self._above = tuple(above)
        self._below = tuple(below)
        self._up = tuple(tuple(lst) for lst in up)
        self._down = tuple(tuple(lst) for lst in down)
        self._topo = tuple(topo)
        self._component = tuple(component)

    # -- basic accessors ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElementError(f"unknown element {x!r}") from None

    def is_less_idx(self, i: int, j: int) -> bool:
        return bool((self._above[i] >> j) & 1)

    def above_mask(self, i: int) -> int:
        return self._above[i]

    def below_mask(self, i: int) -> int:
        return self._below[i]

    def up_covers_idx(self, i: int) -> tuple[int, ...]:
        return self._up[i]

    def down_covers_idx(self, i: int) -> tuple[int, ...]:
        return self._down[i]

    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    @property
    def component_ids(self) -> tuple[int, ...]:
        return self._component

    @property
    def component_count(self) -> int:
        return max(self._component, default=-1) + 1

    def strict_pairs(self):
        """Yield all (x, y) with x < y, ordered by element indices."""
        for i in range(self.n):
            for j in _bits(self._above[i]):
                yield (self.elements[i], self.elements[j])

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({self.n} elements, {len(self.covers)} covers)"


def _topological_order(up, down) -> list[int]:
    n = len(up)
    indeg = [len(down[i]) for i in range(n)]
    queue = [i for i in range(n) if indeg[i] == 0]
    order = []
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        order.append(cur)
        for nb in up[cur]:
            indeg[nb] -= 1
            if indeg[nb] == 0:
                queue.append(nb)
    if len(order) != n:
        raise CycleError("cover relation contains a directed cycle")
    return order


def from_covers(elements, covers) -> Poset:
    """Build a validated poset from element identifiers and cover pairs."""
    return Poset(elements, covers)


def transitive_reduction(elements, pairs) -> list[tuple[str, str]]:
    """Reduce an arbitrary acyclic relation to its cover pairs.

    Accepts pairs that are redundant or duplicated, closes them
    transitively, and returns the covers of the resulting order in
    element-index order.  Raises CycleError on cyclic input.
    """
    elems = tuple(elements)
    index = {e: i for i, e in enumerate(elems)}
    if len(index) != len(elems):
        raise DuplicateError("duplicate element identifier")
    n = len(elems)
    up = [set() for _ in range(n)]
    down = [set() for _ in range(n)]
    for lo, hi in pairs:
        if lo not in index:
            raise UnknownElementError(f"unknown element {lo!r}")
        if hi not in index:
            raise UnknownElementError(f"unknown element {hi!r}")
        if lo == hi:
            raise CycleError(f"self-pair on {lo!r}")
        up[index[lo]].add(index[hi])
        down[index[hi]].add(index[lo])
    topo = _topological_order([sorted(s) for s in up], [sorted(s) for s in down])
    above = [0] * n
    for i in reversed(topo):
        mask = 0
        for j in up[i]:
            mask |= (1 << j) | above[j]
        above[i] = mask
    below = [0] * n
    for i in topo:
        mask = 0
        for j in down[i]:
            mask |= (1 << j) | below[j]
        below[i] = mask
    covers = []
    for i in range(n):
        for j in _bits(above[i]):
            if not (above[i] & below[j]):
                covers.append((elems[i], elems[j]))
    return covers


def leq(P: Poset, x: str, y: str) -> Relation:
    """Four-way comparison of two elements in the derived order."""
    i, j = P.index(x), P.index(y)
    if i == j:
        return Relation.EQUAL
    if P.is_less_idx(i, j):
        return Relation.LESS
    if P.is_less_idx(j, i):
        return Relation.GREATER
    return Relation.INCOMPARABLE


def shape_stats(P: Poset) -> ShapeStats:
    n = P.n
    minimal = sum(1 for i in range(n) if P.below_mask(i) == 0)
    maximal = sum(1 for i in range(n) if P.above_mask(i) == 0)
    middle = sum(
        1 for i in range(n) if P.below_mask(i) != 0 and P.above_mask(i) != 0
    )
    height = [0] * n
    best = 0
    for i in P.topological_order():
        h = 1
        for j in P.down_covers_idx(i):
            if height[j] + 1 > h:
                h = height[j] + 1
        height[i] = h
        if h > best:
            best = h
    return ShapeStats(
        vertex_count=n,
        edge_count=len(P.covers),
        component_count=P.component_count,
        height=best,
        minimal_count=minimal,
        maximal_count=maximal,
        middle_count=middle,
    )


def beat_points(P: Poset) -> list[str]:
    """Elements that cover exactly one element or are covered by exactly one."""
    out = []
    for i in range(P.n):
        if len(P.down_covers_idx(i)) == 1 or len(P.up_covers_idx(i)) == 1:
            out.append(P.elements[i])
    return out


def _delete_element(P: Poset, x: str) -> Poset:
    xi = P.index(x)
    keep = [i for i in range(P.n) if i != xi]
    keep_mask = 0
    for i in keep:
        keep_mask |= 1 << i
    elements = [P.elements[i] for i in keep]
    covers = []
    for i in keep:
        for j in _bits(P.above_mask(i) & keep_mask):
            if not (P.above_mask(i) & P.below_mask(j) & keep_mask):
                covers.append((P.elements[i], P.elements[j]))
    return Poset(elements, covers)


def core(P: Poset) -> Poset:
    """Remove beat points (first in element order) until none remain."""
    cur = P
    while True:
        bp = beat_points(cur)
        if not bp:
            return cur
        cur = _delete_element(cur, bp[0])


def find_crowns(P: Poset, max_n: int = 6) -> list[Crown]:
    """All induced crown subposets with 2 <= n <= max_n.

    Each crown is reported once, up to rotation and reflection of its
    indices.  Backtracking search over alternating lower/upper walks,
    anchored at the smallest lower element.
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    n = P.n
    above = P._above
    used = [False] * n
    found: list[Crown] = []

    def lt(i, j):
        return (above[i] >> j) & 1

    def add_upper(us, vs):
        k = len(us)
        last = us[-1]
        for v in range(n):
            if used[v] or not lt(last, v):
                continue
            if any(lt(v, u) for u in us):
                continue
            if any(lt(us[j], v) for j in range(1, k - 1)):
                continue
            if any(lt(v, w) or lt(w, v) for w in vs):
                continue
            if k >= 2 and lt(us[0], v):
                # closing edge; skip the mirror-image walk
                if vs[0] < v:
                    found.append(_make_crown(P, us, vs + [v]))
                continue
            if k < max_n:
                used[v] = True
                add_lower(us, vs + [v])
                used[v] = False

    def add_lower(us, vs):
        v_last = vs[-1]
        for u in range(us[0] + 1, n):
            if used[u] or not lt(u, v_last):
                continue
            if any(lt(u, x) or lt(x, u) for x in us):
                continue
            if any(lt(u, w) or lt(w, u) for w in vs[:-1]):
                continue
            used[u] = True
            add_upper(us + [u], vs)
            used[u] = False

    for start in range(n):
        used[start] = True
        add_upper([start], [])
        used[start] = False

    idx = P.index
    found.sort(
        key=lambda c: (c.n, tuple(idx(e) for e in c.lower), tuple(idx(e) for e in c.upper))
    )
    return found


def _make_crown(P: Poset, us, vs) -> Crown:
    # walk order us[i] < vs[i], us[i+1] < vs[i]; rotate uppers so that
    # lower[i] < upper[i] and lower[i] < upper[i+1] (mod n)
    lower = tuple(P.elements[u] for u in us)
    upper = tuple(P.elements[v] for v in [vs[-1]] + vs[:-1])
    return Crown(lower=lower, upper=upper)


def join_meet(P: Poset, subset) -> tuple[str | None, str | None]:
    """Least upper bound and greatest lower bound of a set, or None each."""
    idxs = [P.index(x) for x in subset]
    if not idxs:
        raise ValueError("subset must be nonempty")
    full = (1 << P.n) - 1
    ub = full
    lb = full
    for i in idxs:
        ub &= P.above_mask(i) | (1 << i)
        lb &= P.below_mask(i) | (1 << i)
    join = None
    for u in _bits(ub):
        if ub & ~(P.above_mask(u) | (1 << u)) == 0:
            join = P.elements[u]
            break
    meet = None
    for u in _bits(lb):
        if lb & ~(P.below_mask(u) | (1 << u)) == 0:
            meet = P.elements[u]
            break
    return join, meet


def canonical_form(P: Poset) -> bytes:
    """Byte string equal for two posets iff they are order-isomorphic.

    Color refinement on the strict order relation fixes an ordered cell
    partition; a backtracking search over cell-respecting element orders
    then selects the lexicographically least relation encoding.
    """
    n = P.n
    if n == 0:
        return b"0:"
    above = P._above
    below = P._below

    color = [0] * n
    ncolors = 1
    while True:
        keys = []
        for i in range(n):
            keys.append(
                (
                    color[i],
                    tuple(sorted(color[j] for j in _bits(below[i]))),
                    tuple(sorted(color[j] for j in _bits(above[i]))),
                )
            )
        uniq = sorted(set(keys))
        remap = {k: c for c, k in enumerate(uniq)}
        color = [remap[k] for k in keys]
        if len(uniq) == ncolors:
            break
        ncolors = len(uniq)

    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for i in range(n):
        cells[color[i]].append(i)
    cell_at = [c for c, cell in enumerate(cells) for _ in cell]

    best: list[int] | None = None
    cur: list[int] = []
    placed: list[int] = []
    used = [False] * n

    def key_for(v):
        k = 0
        for t, p in enumerate(placed):
            k |= ((above[p] >> v) & 1) << (2 * t)
            k |= ((above[v] >> p) & 1) << (2 * t + 1)
        return k

    def rec(pos):
        nonlocal best
        if pos == n:
            if best is None or cur < best:
                best = cur[:]
            return
        groups: dict[int, list[int]] = {}
        for v in cells[cell_at[pos]]:
            if not used[v]:
                groups.setdefault(key_for(v), []).append(v)
        kmin = min(groups)
        if best is not None and cur == best[:pos] and kmin > best[pos]:
            return
        cur.append(kmin)
        for v in groups[kmin]:
            used[v] = True
            placed.append(v)
            rec(pos + 1)
            placed.pop()
            used[v] = False
        cur.pop()

    rec(0)
    assert best is not None
    return (f"{n}:" + ",".join(map(str, best))).encode("ascii")
