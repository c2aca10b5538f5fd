"""Combinatorial sufficient conditions for conclusiveness.

Two independent code paths are kept deliberately separate: the rational
bound on the middle-layer size, and a literal 17-row lookup table over
(min level size, max level size, middle count, height).  The table is
encoded exactly as published; its row 15 is known to clash with the
13-element projective-plane fixture, so reports surface the conflict
instead of silently editing the table (see table2_conflict).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poset import Crown, Poset, ShapeStats, beat_points, find_crowns, join_meet, shape_stats


@dataclass(frozen=True)
class Co18Result:
    applicable: bool
    satisfied: bool | None


@dataclass(frozen=True)
class CrownReport:
    crowns_found: int
    all_have_join_or_meet: bool


@dataclass(frozen=True)
class CriteriaReport:
    stats: ShapeStats
    beat_point_free: bool
    co18: Co18Result
    size_bound_ok: bool | None
    table2_case: int | None
    crowns: CrownReport


def co18_threshold(minimal: int, maximal: int, height: int) -> Fraction:
    """Exact middle-layer bound: n*m / ((n-2)(m-2)) plus 1 when height > 3."""
    if minimal <= 2 or maximal <= 2:
        raise ValueError("bound needs more than two minimal and maximal elements")
    delta = 1 if height > 3 else 0
    return Fraction(minimal * maximal, (minimal - 2) * (maximal - 2)) + delta


def co18_bound(P: Poset) -> Co18Result:
    """Middle-layer bound certifying conclusiveness for beat-point-free posets."""
    stats = shape_stats(P)
    applicable = (
        not beat_points(P)
        and stats.minimal_count > 2
        and stats.maximal_count > 2
    )
    if not applicable:
        return Co18Result(applicable=False, satisfied=None)
    bound = co18_threshold(stats.minimal_count, stats.maximal_count, stats.height)
    return Co18Result(applicable=True, satisfied=Fraction(stats.middle_count) < bound)


def size_bound_check(P: Poset):
    """V >= 2 * height for beat-point-free posets other than a single point.

    Returns None when the bound does not apply.  A False result would
    indicate an internal bug, since the bound is a theorem; it is used
    as a self-test on cores.
    """
    if P.n <= 1 or beat_points(P):
        return None
    return P.n >= 2 * shape_stats(P).height


# One row per case: (case, d_lo, d_hi, e_lo, e_hi, l_lo, l_hi, h_lo, h_hi),
# where d = min(minimal_count, maximal_count), e = max of the two,
# l = middle_count, h = height; None means unbounded on that side.
_TABLE2 = (
    (1, 6, None, None, None, 2, 2, 4, 4),
    (2, 5, 5, 13, None, 2, 2, 4, 4),
    (3, 5, 5, None, 12, 2, 3, 4, 5),
    (4, 5, 5, None, 12, 2, 2, 3, 3),
    (5, 4, 4, 6, None, 2, 3, 4, 5),
    (6, 4, 4, None, None, 2, 2, 3, 3),
    (7, 3, 3, 9, None, 2, 4, 4, 6),
    (8, 3, 3, 9, None, 2, 3, 3, 3),
    (9, 3, 3, 6, 8, 3, 5, 4, 6),
    (10, 3, 3, 6, 8, 2, 5, 4, 5),
    (11, 3, 3, 6, 8, 2, 4, 3, 3),
    (12, 3, 3, 5, 5, 6, 6, 4, 6),
    (13, 3, 3, 5, 5, 5, 5, 3, 6),
    (14, 3, 3, 4, 4, 7, 7, 4, 6),
    (15, 3, 3, 4, 4, 6, 6, 3, 6),
    (16, 3, 3, 3, 3, 9, 9, 4, 8),
    (17, 3, 3, 3, 3, 7, 8, 3, 6),
)


def _in_range(value: int, lo: int | None, hi: int | None) -> bool:
    if lo is not None and value < lo:
        return False
    if hi is not None and value > hi:
        return False
    return True


def table2_lookup(stats: ShapeStats, beat_point_free: bool) -> int | None:
    """First matching row of the literal conclusiveness table, or None.

    The table only speaks about beat-point-free posets with more than 12
    elements and height at least 3 (element-count convention).
    """
    if not beat_point_free or stats.vertex_count <= 12 or stats.height < 3:
        return None
    d = min(stats.minimal_count, stats.maximal_count)
    e = max(stats.minimal_count, stats.maximal_count)
    for case, d_lo, d_hi, e_lo, e_hi, l_lo, l_hi, h_lo, h_hi in _TABLE2:
        if (
            _in_range(d, d_lo, d_hi)
            and _in_range(e, e_lo, e_hi)
            and _in_range(stats.middle_count, l_lo, l_hi)
            and _in_range(stats.height, h_lo, h_hi)
        ):
            return case
    return None


def crown_obstruction_report(P: Poset, max_n: int = 6) -> CrownReport:
    """Count crowns and check each crown's element set for a join or meet.

    If every crown has a join or a meet, the poset cannot be defective:
    an outer derivation would have nonzero circulation on some minimal
    cycle, which is a crown, and a join or meet telescopes that
    circulation to zero.
    """
    crowns = find_crowns(P, max_n)
    all_have = True
    for crown in crowns:
        join, meet = join_meet(P, sorted(crown.element_set(), key=P.index))
        if join is None and meet is None:
            all_have = False
            break
    return CrownReport(crowns_found=len(crowns), all_have_join_or_meet=all_have)


def crowns_without_bounds(P: Poset, max_n: int = 6) -> list[Crown]:
    """The crowns whose element set has neither a join nor a meet."""
    out = []
    for crown in find_crowns(P, max_n):
        join, meet = join_meet(P, sorted(crown.element_set(), key=P.index))
        if join is None and meet is None:
            out.append(crown)
    return out


def criteria_report(P: Poset, max_crown_n: int = 6) -> CriteriaReport:
    stats = shape_stats(P)
    bpf = not beat_points(P)
    return CriteriaReport(
        stats=stats,
        beat_point_free=bpf,
        co18=co18_bound(P),
        size_bound_ok=size_bound_check(P),
        table2_case=table2_lookup(stats, bpf),
        crowns=crown_obstruction_report(P, max_crown_n),
    )


def table2_conflict(table2_case: int | None, torsion1) -> str | None:
    """Message naming the table row that clashes with computed torsion."""
    if table2_case is not None and torsion1:
        return (
            f"table2 case {table2_case} claims conclusiveness but homology "
            f"has torsion {list(torsion1)}"
        )
    return None
