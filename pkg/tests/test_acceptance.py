"""Acceptance gate: ten end-to-end checks, one pass/fail line each.

Runs under pytest with the rest of the suite, or standalone:

    python3 tests/test_acceptance.py

Standalone mode prints every line and exits nonzero if any criterion fails.
"""

import functools
import io
import json
import time
from contextlib import redirect_stdout

import pytest

from sumsetchains.chains import canonical_form, enumerate_chains, is_chain, verify_main_theorem
from sumsetchains.cli import main as cli_main
from sumsetchains.dimension import additive_dim, relation_rank
from sumsetchains.doubling import doubling_from_profile, mu, profile, t_range
from sumsetchains.errors import DecompositionNotUnique, NotDecomposable
from sumsetchains.growth import (
    GrowthVariant,
    adjoin_double_max,
    dilate_adjoin_odd,
    factorize,
    odd_adjoin_candidates,
)
from sumsetchains.intset import IntSet, doubling
from sumsetchains.search import (
    attainment_construction,
    extension_lemma_sweep,
    is_1_extremal,
    vol1_oracle,
)
from sumsetchains.stability import (
    doubled_decomposition_length,
    is_right_stable,
    is_stable,
    stable_decompose,
)

S = IntSet.from_text

FIGURE_ROWS_K5 = [
    "{0,1,2,3,4}",
    "{0,2,3,4,5}",
    "{0,2,4,5,6}",
    "{0,3,4,5,6}",
    "{0,2,3,4,6}",
    "{0,4,5,6,8}",
    "{0,4,6,7,8}",
]


def criterion_1():
    """Chain table at k=5 through the CLI, exact and under a second."""
    buf = io.StringIO()
    start = time.perf_counter()
    with redirect_stdout(buf):
        code = cli_main(["chain-enum", "--k", "5"])
    elapsed = time.perf_counter() - start
    if code != 0:
        return False, f"chain-enum exited {code}"
    records = [json.loads(line) for line in buf.getvalue().splitlines()]
    if len(records) != 7:
        return False, f"expected 7 chains, got {len(records)}"
    doublings = sorted(r["t"] for r in records)
    if doublings != [9, 10, 11, 11, 11, 12, 12]:
        return False, f"doubling multiset {doublings}"
    maxes = sorted(r["set"][-1] for r in records)
    if maxes != [4, 5, 6, 6, 6, 8, 8]:
        return False, f"max elements {maxes}"
    enumerated = {tuple(r["set"]) for r in records}
    expected = {canonical_form(S(row)).elements for row in FIGURE_ROWS_K5}
    if enumerated != expected:
        return False, f"rows differ: {sorted(enumerated - expected)}"
    if elapsed >= 1.0:
        return False, f"took {elapsed:.2f}s, budget 1s"
    return True, f"7 chains, doublings {{9,10,11,11,11,12,12}} in {elapsed * 1000:.0f}ms"


def criterion_2():
    """Dimension examples, each under a millisecond."""
    a, b = S("{0,1,2,4}"), S("{0,1,2,5}")
    if (additive_dim(a), relation_rank(a).rank) != (1, 2):
        return False, f"dim/rank of {a.to_text()} = {additive_dim(a)}/{relation_rank(a).rank}"
    if additive_dim(b) != 2:
        return False, f"dim of {b.to_text()} = {additive_dim(b)}"
    best = min(
        _timed(lambda: (additive_dim(a), additive_dim(b)))
        for _ in range(20)
    )
    if best >= 1e-3:
        return False, f"best of 20 runs took {best * 1e3:.2f}ms, budget 1ms"
    return True, f"dim examples exact, {best * 1e6:.0f}us per pair"


def _timed(f):
    start = time.perf_counter()
    f()
    return time.perf_counter() - start


def criterion_3():
    """Stability flagship examples."""
    a = S("{0,4,5,8,9,12}")
    b = S("{0,2,3,6}")
    checks = [
        is_stable(a),
        not is_right_stable(a),
        is_right_stable(b),
        not is_stable(b),
        is_stable(S("{0}")),
    ]
    if not all(checks):
        return False, f"predicate vector {checks}"
    return True, "stable/right-stable split exactly as documented"


def criterion_4():
    """Max-volume table: recurrence, monotonicity, profile round-trip."""
    start = time.perf_counter()
    for k in range(4, 13):
        lo, hi = t_range(k)
        previous = None
        for t in range(lo, hi + 1):
            p = profile(k, t)
            if doubling_from_profile(k, p.c, p.b) != t:
                return False, f"profile round-trip broke at k={k}, t={t}"
            if mu(k + 1, t + k) != 2 * mu(k, t):
                return False, f"doubling recurrence broke at k={k}, t={t}"
            if previous is not None and p.mu <= previous:
                return False, f"monotonicity broke at k={k}, t={t}"
            previous = p.mu
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        return False, f"took {elapsed:.2f}s, budget 1s"
    return True, f"k in [4,12] exhaustive in {elapsed * 1000:.0f}ms"


@functools.lru_cache(maxsize=None)
def _oracle_reports(k_hi: int = 7):
    reports = {}
    for k in range(4, k_hi + 1):
        lo, hi = t_range(k)
        for t in range(lo, hi + 1):
            reports[k, t] = vol1_oracle(k, t)
    return reports


def criterion_5():
    """Growth arithmetic on every extremal witness found by the oracle."""
    checked = 0
    for (k, t), rep in _oracle_reports().items():
        for w in rep.witness_sets:
            if w.max != mu(k, t):
                continue
            checked += 1
            grown = adjoin_double_max(w)
            if doubling(grown) != t + k or grown.max != mu(k + 1, t + k):
                return False, f"extend-right arithmetic broke on {w.to_text()}"
            for x in odd_adjoin_candidates(w):
                dx = dilate_adjoin_odd(w, x)
                if doubling(dx) != t + k or dx.max != mu(k + 1, t + k):
                    return False, f"dilate-adjoin({x}) arithmetic broke on {w.to_text()}"
    return True, f"doubling and max tracked on {checked} extremal witnesses, k <= 7"


def criterion_6():
    """Extension sweep: overlap identity and drift bounds, no exceptions."""
    pairs = 0
    for k in range(3, 8):
        report = extension_lemma_sweep(k)
        if report.violations:
            return False, f"k={k}: {report.violations[:3]}"
        pairs += report.pairs_checked
    return True, f"{pairs} set/extension pairs clean for k in [3,7]"


def criterion_7():
    """The volume conjecture holds exhaustively through k = 7."""
    for (k, t), rep in _oracle_reports().items():
        if rep.violation_list:
            return False, f"(k,t)=({k},{t}) violations {rep.violation_list[:3]}"
        if rep.observed_max_vol != mu(k, t) + 1 or not rep.attained:
            return False, f"(k,t)=({k},{t}) observed {rep.observed_max_vol}"
        if attainment_construction(k, t) not in rep.witness_sets:
            return False, f"(k,t)=({k},{t}) construction is not a witness"
    return True, "observed = mu+1 with constructed witness, k in [4,7]; k=8 opt-in"


def criterion_8():
    """Every enumerated chain factorizes and replays, k in [4,8]."""
    total = 0
    for k in range(4, 9):
        for rec in enumerate_chains(k):
            total += 1
            report = verify_main_theorem(is_chain(rec.set))
            if not report.ok:
                return False, f"{rec.set.to_text()}: {report.failures}"
    return True, f"{total} chains verified, zero failures"


def criterion_9():
    """Negative controls: extremal does not imply chain or extend-right form."""
    a = S("{0,3,4,6,7,8}")
    if not (is_1_extremal(a) and doubling(a) == 14 and a.max == mu(6, 14)):
        return False, f"{a.to_text()} is not the expected extremal configuration"
    if is_chain(a) is not None:
        return False, f"{a.to_text()} was recognized as a chain"
    b = S("{0,1,2,4,6}")
    if not is_1_extremal(b):
        return False, f"{b.to_text()} should be extremal"
    if b.max == 2 * b.elements[-2]:
        return False, f"{b.to_text()} looks like an extend-right image"
    c = S("{0,1,2,4,8}")
    f = factorize(c)
    if not (
        is_1_extremal(c)
        and f.base == S("{0,1,2}")
        and [s.variant for s in f.steps] == [GrowthVariant.EXTEND_RIGHT] * 2
    ):
        return False, f"{c.to_text()} did not factor as two extend-right steps"
    return True, "extremal non-chain and extremal non-image behave as documented"


def criterion_10():
    """Structure of extremal sets in the small-doubling regime."""
    checked = 0
    for (k, t), rep in _oracle_reports().items():
        if t > 3 * k - 4:
            continue
        b = t - (2 * k - 1)
        for w in rep.witness_sets:
            if w.max != mu(k, t):
                continue
            checked += 1
            if w.length != k + b:
                return False, f"{w.to_text()}: hull {w.length} != k+b = {k + b}"
            try:
                dec = stable_decompose(w)
            except (NotDecomposable, DecompositionNotUnique) as exc:
                return False, f"{w.to_text()}: {type(exc).__name__}"
            p_len = doubled_decomposition_length(w, dec)
            if p_len is None or p_len < t - b:
                return False, f"{w.to_text()}: doubled segment {p_len} < {t - b}"
    return True, f"{checked} extremal witnesses decompose with the long doubled segment"


CRITERIA = [
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6),
    (7, criterion_7),
    (8, criterion_8),
    (9, criterion_9),
    (10, criterion_10),
]


@pytest.mark.parametrize("number,check", CRITERIA, ids=[f"criterion-{n}" for n, _ in CRITERIA])
def test_criterion(number, check):
    passed, detail = check()
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    print(line)
    assert passed, line


def main() -> int:
    failures = 0
    for number, check in CRITERIA:
        try:
            passed, detail = check()
        except Exception as exc:  # a crashed criterion is a failed criterion
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
        failures += not passed
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
