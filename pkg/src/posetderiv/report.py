"""External JSON schemas: input parsing and report assembly.

Every numeric value in a report is exact: integers stay integers and
rationals are rendered as "p/q" strings.  No floats appear anywhere.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

from .criteria import CriteriaReport, criteria_report, table2_conflict
from .derivations import (
    DEFAULT_PATH_LIMIT,
    TransitiveFunction,
    consistency_matrix,
    outer_witness,
)
from .errors import InputError, UnsupportedRingError
from .homology import classify, homology
from .linalg import Ring, _field_modulus, rank_from_divisors, smith_normal_form
from .poset import Poset, ShapeStats, canonical_form, shape_stats, transitive_reduction


def _identifier_ok(value) -> bool:
    return (
        isinstance(value, str)
        and len(value) > 0
        and not any(ord(ch) < 32 or ord(ch) == 127 for ch in value)
    )


def poset_from_json(obj, reduce: bool = False) -> Poset:
    """Validate and build a poset from {"elements": [...], "covers": [[lo, hi], ...]}.

    With reduce=True the cover list may contain transitively redundant
    pairs; they are folded into the reduction instead of rejected.
    """
    if not isinstance(obj, dict):
        raise InputError("poset JSON must be an object")
    elements = obj.get("elements")
    covers = obj.get("covers")
    if not isinstance(elements, list) or not all(_identifier_ok(e) for e in elements):
        raise InputError(
            "'elements' must be a list of nonempty strings without control characters"
        )
    if not isinstance(covers, list):
        raise InputError("'covers' must be a list of [lower, upper] pairs")
    pairs = []
    for item in covers:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(_identifier_ok(x) for x in item)
        ):
            raise InputError(f"bad cover pair {item!r}")
        pairs.append((item[0], item[1]))
    if reduce:
        pairs = transitive_reduction(elements, pairs)
    return Poset(elements, pairs)


def _parse_value(ring: Ring, raw):
    if isinstance(raw, bool):
        raise InputError(f"bad ring value {raw!r}")
    if isinstance(raw, int):
        return ring.normalize(raw)
    if ring.tag == "rationals" and isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational value {raw!r}") from None
    raise InputError(f"bad ring value {raw!r}")


def function_values_from_json(obj, P: Poset):
    """Parse {"ring": ..., "cover_values": [[lo, hi, value], ...]}.

    Every cover edge of P must be assigned exactly once; a missing edge
    is a parse error, never a silent zero.
    """
    from .linalg import ring_from_string

    if not isinstance(obj, dict):
        raise InputError("function JSON must be an object")
    ring_text = obj.get("ring")
    if not isinstance(ring_text, str):
        raise InputError("'ring' must be a ring string (q, gf:p or mod:n)")
    ring = ring_from_string(ring_text)
    triples = obj.get("cover_values")
    if not isinstance(triples, list):
        raise InputError("'cover_values' must be a list of [lower, upper, value]")
    values: dict[tuple[str, str], object] = {}
    for item in triples:
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise InputError(f"bad cover value triple {item!r}")
        lo, hi, raw = item
        if not (_identifier_ok(lo) and _identifier_ok(hi)):
            raise InputError(f"bad cover value triple {item!r}")
        if (lo, hi) in values:
            raise InputError(f"cover edge ({lo!r}, {hi!r}) assigned twice")
        values[(lo, hi)] = _parse_value(ring, raw)
    cover_set = set(P.covers)
    for edge in values:
        if edge not in cover_set:
            raise InputError(f"pair {edge!r} is not a cover edge of the poset")
    for edge in P.covers:
        if edge not in values:
            raise InputError(f"cover edge {edge!r} has no assigned value")
    return ring, values


def encode_value(ring: Ring, value):
    if ring.tag == "rationals":
        return str(Fraction(value))
    return int(value)


def function_json(f: TransitiveFunction) -> dict:
    return {
        "ring": f.ring.label(),
        "cover_values": [
            [lo, hi, encode_value(f.ring, f.values[(lo, hi)])]
            for lo, hi in f.poset.covers
        ],
    }


def stats_json(stats: ShapeStats) -> dict:
    return {
        "vertex_count": stats.vertex_count,
        "edge_count": stats.edge_count,
        "component_count": stats.component_count,
        "height": stats.height,
        "minimal_count": stats.minimal_count,
        "maximal_count": stats.maximal_count,
        "middle_count": stats.middle_count,
    }


def criteria_json(rep: CriteriaReport) -> dict:
    return {
        "beat_point_free": rep.beat_point_free,
        "co18": {"applicable": rep.co18.applicable, "satisfied": rep.co18.satisfied},
        "size_bound_ok": rep.size_bound_ok,
        "table2_case": rep.table2_case,
        "crowns": {
            "crowns_found": rep.crowns.crowns_found,
            "all_have_join_or_meet": rep.crowns.all_have_join_or_meet,
        },
    }


def canonical_sha256(P: Poset) -> str:
    return hashlib.sha256(canonical_form(P)).hexdigest()


def require_rank_ring(ring: Ring) -> None:
    """Reject rings without a well-defined matrix rank, with guidance."""
    try:
        _field_modulus(ring)
    except UnsupportedRingError:
        raise UnsupportedRingError(
            f"the rank criterion needs a field, not {ring.label()}; use the "
            "homology command for a coefficient-independent classification"
        ) from None


def analysis_report(
    P: Poset,
    rings,
    path_limit: int = DEFAULT_PATH_LIMIT,
    include_witness: bool = False,
) -> dict:
    """Full per-poset report: homology, per-ring dimensions, criteria."""
    for ring in rings:
        require_rank_ring(ring)
    stats = shape_stats(P)
    verdict = classify(P)
    divisors = smith_normal_form(consistency_matrix(P, path_limit).matrix).divisors
    pot = P.n - P.component_count
    edge_count = len(P.covers)

    rings_out = []
    witness_prime = None
    for ring in rings:
        der = edge_count - rank_from_divisors(divisors, ring)
        outer = der > pot
        rings_out.append(
            {
                "ring": ring.label(),
                "der_dim": der,
                "pot_dim": pot,
                "outer_exists": outer,
            }
        )
        p = _field_modulus(ring)
        if outer and p is not None and witness_prime is None:
            witness_prime = p

    crit = criteria_report(P)
    conflicts = []
    message = table2_conflict(crit.table2_case, verdict.torsion1)
    if message:
        conflicts.append(message)

    witness = None
    if include_witness and witness_prime is not None:
        w = outer_witness(P, witness_prime, path_limit)
        if w is not None:
            witness = function_json(w)

    return {
        "poset": {
            "stats": stats_json(stats),
            "canonical_sha256": canonical_sha256(P),
        },
        "homology": {
            "dim": 1,
            "betti": verdict.betti1,
            "torsion": list(verdict.torsion1),
        },
        "rings": rings_out,
        "conclusiveness": {
            "soluble": verdict.soluble,
            "defective_uct": verdict.defective_uct,
            "conclusive_torsion_free": verdict.conclusive_torsion_free,
        },
        "criteria": criteria_json(crit),
        "conflicts": conflicts,
        "witness": witness,
    }


def homology_json(P: Poset, dim: int) -> dict:
    h = homology(P, dim)
    return {"dim": h.dim, "betti": h.betti, "torsion": list(h.torsion)}


def sweep_json(report) -> dict:
    return {
        "max_n": report.max_n,
        "counts_by_n": [list(t) for t in report.counts_by_n],
        "defective_by_n": [list(t) for t in report.defective_by_n],
        "soluble_by_n": [list(t) for t in report.soluble_by_n],
        "inconclusive_found": list(report.inconclusive_found),
        "identity_failures": list(report.identity_failures),
        "elapsed_ms": report.elapsed_ms,
        "ok": report.ok,
    }
