"""Additive dimension via the rank of relation vectors.

To each relation a_i + a_j = a_r + a_s among elements of A associate the
vector e_i + e_j - e_r - e_s in Z^k. The rank of all such vectors is at most
k - 2 (every vector is orthogonal to both (1,...,1) and (a_0,...,a_{k-1})),
and the additive dimension of A is k - 1 - rank. Dimension 1 means the rank
is exactly k - 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from ._kernel_py import rank_of_rows
from .errors import CapacityError
from .intset import IntSet, difference_set, normalize, require_normal, sumset

FISO_CAP = 10


@dataclass(frozen=True)
class RelationBasis:
    """All equal-sum quadruples of A and the rank of their span.

    relations holds every (i, j, r, s) with i <= j, r <= s,
    (i, j) < (r, s) lexicographically and a_i + a_j = a_r + a_s.
    """

    k: int
    relations: tuple[tuple[int, int, int, int], ...]
    rank: int


def relation_rank(a: IntSet) -> RelationBasis:
    if len(a) < 2:
        raise ValueError("relation_rank requires |A| >= 2")
    elems = a.elements
    k = len(elems)
    by_sum: dict[int, list[tuple[int, int]]] = {}
    for i in range(k):
        for j in range(i, k):
            by_sum.setdefault(elems[i] + elems[j], []).append((i, j))
    quads: list[tuple[int, int, int, int]] = []
    rows: list[list[int]] = []
    for s in sorted(by_sum):
        group = by_sum[s]
        for gi in range(len(group)):
            for gj in range(gi + 1, len(group)):
                (i, j), (r, t) = group[gi], group[gj]
                quads.append((i, j, r, t))
                row = [0] * k
                row[i] += 1
                row[j] += 1
                row[r] -= 1
                row[t] -= 1
                rows.append(row)
    quads.sort()
    return RelationBasis(k=k, relations=tuple(quads), rank=rank_of_rows(rows, k, k - 2))


def additive_dim(a: IntSet) -> int:
    """k - 1 - rank of the relation vectors; 1 for progressions, k - 1 for
    Sidon sets."""
    if len(a) < 2:
        raise ValueError("additive_dim requires |A| >= 2")
    return len(a) - 1 - relation_rank(a).rank


def is_one_dimensional(a: IntSet) -> bool:
    if len(a) < 2:
        return False
    return kernel.is_one_dimensional(a.elements)


def extension_candidates(a: IntSet) -> IntSet:
    """Elements x > max(A) with A ∪ {x} still one-dimensional.

    For one-dimensional normal A these are exactly the points of 2A - A
    beyond max(A); they never exceed 2 max(A).
    """
    require_normal(a, "extension_candidates")
    if not is_one_dimensional(a):
        raise ValueError("extension_candidates requires a one-dimensional set")
    pool = difference_set(sumset(a, a), a)
    return IntSet(x for x in pool if x > a.max)


def _compatible(a: tuple[int, ...], b: tuple[int, ...], images: list[int], n: int) -> bool:
    # after placing position n, verify every quadruple involving n
    for p in range(n + 1):
        sa = a[p] + a[n]
        sb = b[images[p]] + b[images[n]]
        for r in range(n + 1):
            for s in range(r, n + 1):
                if (a[r] + a[s] == sa) != (b[images[r]] + b[images[s]] == sb):
                    return False
    return True


def f_isomorphism(a: IntSet, b: IntSet) -> dict[int, int] | None:
    """A bijection A -> B preserving x + y = z + t in both directions,
    or None. Backtracking over partial maps; |A| <= 10."""
    if len(a) != len(b):
        return None
    k = len(a)
    if k > FISO_CAP:
        raise CapacityError(f"isomorphism search capped at |A| <= {FISO_CAP}, got {k}")
    an, ashift, ascale = normalize(a)
    bn, bshift, bscale = normalize(b)
    if kernel.doubling_size(an.elements) != kernel.doubling_size(bn.elements):
        return None
    ae, be = an.elements, bn.elements

    def translate(images: list[int]) -> dict[int, int]:
        return {
            ascale * ae[i] + ashift: bscale * be[images[i]] + bshift for i in range(k)
        }

    if ae == be:
        return translate(list(range(k)))

    images: list[int] = []
    used = [False] * k

    def place(n: int) -> bool:
        if n == k:
            return True
        for cand in range(k):
            if used[cand]:
                continue
            images.append(cand)
            used[cand] = True
            if _compatible(ae, be, images, n) and place(n + 1):
                return True
            used[cand] = False
            images.pop()
        return False

    if place(0):
        return translate(images)
    return None


def f_isomorphic(a: IntSet, b: IntSet) -> bool:
    return f_isomorphism(a, b) is not None
