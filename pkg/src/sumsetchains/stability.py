"""Stable sets and the stable/segment/right-stable decomposition.

A set with min 0 is stable when it is a union of progressions with common
difference a1, its least positive element, each running past max - a1, and
neither 1 nor max - 1 belongs to A; {0} is stable by convention. Equivalently:
adding a1 to any element lands back in A or beyond max. Right-stable means
the reflexion is stable. Sets with doubling at most 3k - 4 and maximal hull
split uniquely as stable ∘ segment ∘ right-stable, and their doubling splits
the same way with a longer segment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DecompositionNotUnique, NotDecomposable
from .intset import (
    IntSet,
    concat,
    doubling,
    reflexion,
    require_min_zero,
    require_normal,
    sumset,
)


def is_stable(a: IntSet) -> bool:
    require_min_zero(a, "is_stable")
    if len(a) == 1:
        return True
    if 1 in a or a.max - 1 in a:
        return False
    step = a.elements[1]
    return all(e + step in a for e in a.elements if e + step <= a.max)


def is_right_stable(a: IntSet) -> bool:
    require_min_zero(a, "is_right_stable")
    return is_stable(reflexion(a))


@dataclass(frozen=True)
class DensityCheck:
    """Truthy iff the prefix bound |A ∩ [0,x]| <= ceil((x+1)/2) held for
    every x; dense reports |A| = ceil((max+1)/2)."""

    holds: bool
    dense: bool

    def __bool__(self) -> bool:
        return self.holds


def density_bound_check(a: IntSet) -> DensityCheck:
    if not is_stable(a):
        raise ValueError(f"density_bound_check requires a stable set, got {a.to_text()}")
    count = 0
    present = set(a.elements)
    holds = True
    for x in range(a.max + 1):
        if x in present:
            count += 1
        if count > (x + 2) // 2:
            holds = False
            break
    dense = len(a) == (a.max + 2) // 2
    return DensityCheck(holds=holds, dense=dense)


@dataclass(frozen=True)
class StableDecomposition:
    """A = A1 ∘ P ∘ A2 with A1 stable, P a segment of p_len points starting
    at max(A1), and A2 right-stable."""

    a1: IntSet
    p_len: int
    a2: IntSet

    @property
    def a1_max(self) -> int:
        return self.a1.max

    @property
    def a2_max(self) -> int:
        return self.a2.max

    def reassemble(self) -> IntSet:
        return concat(concat(self.a1, IntSet.segment(self.p_len)), self.a2)


def _candidate_splits(a: IntSet) -> list[StableDecomposition]:
    elems = set(a.elements)
    out = []
    for u in a.elements:
        a1 = IntSet(e for e in a.elements if e <= u)
        if a1.max != u or not is_stable(a1):
            continue
        v = u
        while True:
            a2 = IntSet(e - v for e in a.elements if e >= v)
            if is_right_stable(a2):
                dec = StableDecomposition(a1=a1, p_len=v - u + 1, a2=a2)
                if dec.reassemble() == a:
                    out.append(dec)
            if v + 1 in elems:
                v += 1
            else:
                break
    return out


def stable_decompose(a: IntSet) -> StableDecomposition:
    """The unique split of a normal set with |2A| <= 3|A| - 4.

    Scans every stable prefix against every right-stable suffix joined by a
    run of consecutive elements. No valid split raises NotDecomposable
    (the set is not extremal for its doubling); more than one is an
    invariant violation and raises DecompositionNotUnique.
    """
    require_normal(a, "stable_decompose")
    t = doubling(a)
    cap = 3 * len(a) - 4
    if t > cap:
        raise ValueError(f"stable_decompose requires |2A| <= 3|A|-4 = {cap}, got {t}")
    splits = _candidate_splits(a)
    if not splits:
        raise NotDecomposable(a.to_text())
    if len(splits) > 1:
        raise DecompositionNotUnique(splits)
    return splits[0]


def doubled_decomposition_length(a: IntSet, dec: StableDecomposition) -> int | None:
    """If 2A = A1 ∘ P' ∘ A2 for the parts of dec, the length of P', else None.

    The candidate length is forced by the hulls: |P'| = 2 max(A) + 1
    - max(A1) - max(A2).
    """
    two_a = sumset(a, a)
    p_prime = 2 * a.max + 1 - dec.a1_max - dec.a2_max
    if p_prime < 1:
        return None
    candidate = concat(concat(dec.a1, IntSet.segment(p_prime)), dec.a2)
    return p_prime if candidate == two_a else None
