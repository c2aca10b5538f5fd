"""Enumeration of small posets up to isomorphism and the conclusiveness sweep.

Posets on n elements are generated by extending every representative on
n - 1 elements with a new maximal element placed above each down-closed
subset, then deduplicating by canonical form.  Every poset arises this
way: deleting a maximal element leaves a smaller poset and a down-set.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import SizeLimitError
from .homology import classify
from .derivations import consistency_matrix
from .linalg import RATIONALS, prime_field, rank_from_divisors, smith_normal_form
from .poset import Poset, _bits, canonical_form

SIZE_CAP = 8

_SWEEP_FIELDS = (RATIONALS, prime_field(2), prime_field(3))


@dataclass(frozen=True)
class SweepReport:
    max_n: int
    counts_by_n: tuple[tuple[int, int], ...]
    defective_by_n: tuple[tuple[int, int], ...]
    soluble_by_n: tuple[tuple[int, int], ...]
    inconclusive_found: tuple[str, ...]
    identity_failures: tuple[str, ...]
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return not self.identity_failures


def _down_sets(P: Poset) -> list[int]:
    """All down-closed subsets of P as bitmasks (the empty set included)."""
    out = []
    for mask in range(1 << P.n):
        good = True
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if P.below_mask(j) & ~mask:
                good = False
                break
        if good:
            out.append(mask)
    return out


def _extend(P: Poset, down_set: int) -> Poset:
    new = f"x{P.n}"
    covers = list(P.covers)
    for j in _bits(down_set):
        if not (P.above_mask(j) & down_set):
            covers.append((P.elements[j], new))
    return Poset(P.elements + (new,), covers)


def enumerate_posets(n: int):
    """Yield one representative per isomorphism class of posets on n elements."""
    if not 1 <= n <= SIZE_CAP:
        raise SizeLimitError(f"enumeration supports 1 <= n <= {SIZE_CAP}, got {n}")
    level: dict[bytes, Poset] = {b"1:0": Poset(["x0"], [])}
    for _ in range(n - 1):
        nxt: dict[bytes, Poset] = {}
        for rep in level.values():
            for mask in _down_sets(rep):
                cand = _extend(rep, mask)
                nxt.setdefault(canonical_form(cand), cand)
        level = nxt
    for form in sorted(level):
        yield level[form]


def _analyze_payload(payload):
    """Per-poset sweep record; module-level so process pools can pickle it."""
    elements, covers = payload
    P = Poset(elements, covers)
    form = canonical_form(P).decode("ascii")
    verdict = classify(P)
    divisors = smith_normal_form(consistency_matrix(P).matrix).divisors
    edge_count = len(covers)
    pot = P.n - P.component_count
    identity_ok = True
    for field in _SWEEP_FIELDS:
        der = edge_count - rank_from_divisors(divisors, field)
        p = field.n
        expected = verdict.betti1 + (
            0 if p is None else sum(1 for t in verdict.torsion1 if t % p == 0)
        )
        if der - pot != expected:
            identity_ok = False
    return {
        "n": P.n,
        "form": form,
        "betti1": verdict.betti1,
        "torsion": list(verdict.torsion1),
        "soluble": verdict.soluble,
        "defective": verdict.defective_uct,
        "identity_ok": identity_ok,
    }


def sweep(max_n: int, parallelism: int = 1, progress: bool = False) -> SweepReport:
    """Classify every poset class up to max_n elements and cross-check.

    The cross-check ties the consistency-matrix route to homology: for
    each test field, (E - rank) - (V - C) must equal betti1 plus the
    number of torsion coefficients killed by the field characteristic.
    Report content does not depend on parallelism.
    """
    if not 1 <= max_n <= SIZE_CAP:
        raise SizeLimitError(f"sweep supports 1 <= max_n <= {SIZE_CAP}, got {max_n}")
    start = time.monotonic()
    counts = []
    defective = []
    soluble = []
    inconclusive: list[str] = []
    failures: list[str] = []
    for n in range(1, max_n + 1):
        payloads = [(P.elements, P.covers) for P in enumerate_posets(n)]
        if parallelism > 1 and len(payloads) > 1:
            with ProcessPoolExecutor(max_workers=parallelism) as pool:
                chunk = max(1, len(payloads) // (parallelism * 4))
                records = list(pool.map(_analyze_payload, payloads, chunksize=chunk))
        else:
            records = [_analyze_payload(p) for p in payloads]
        counts.append((n, len(records)))
        defective.append((n, sum(1 for r in records if r["defective"])))
        soluble.append((n, sum(1 for r in records if r["soluble"])))
        for r in records:
            if r["torsion"]:
                inconclusive.append(r["form"])
            if not r["identity_ok"]:
                failures.append(r["form"])
        if progress:
            print(f"sweep: n={n} classes={len(records)}", file=sys.stderr)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SweepReport(
        max_n=max_n,
        counts_by_n=tuple(counts),
        defective_by_n=tuple(defective),
        soluble_by_n=tuple(soluble),
        inconclusive_found=tuple(sorted(inconclusive)),
        identity_failures=tuple(sorted(failures)),
        elapsed_ms=elapsed_ms,
    )
