# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: hot primitives behind the search sweeps.

Mirrors _kernel_py exactly; the wrappers in kernel.py route anything outside
the compiled limits (k <= 12, slice max <= 511, doubling span <= 2^20) to the
pure-Python reference. Keep both implementations in lockstep.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "cython"

DEF MAXK = 12
DEF MAXPAIRS = 78          # k*(k+1)//2 at k = 12
DEF SLICE_WORDS = 16       # 1024 bits: doubling of sets with max <= 511


cdef long long _gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


# ---------------------------------------------------------------------------
# doubling for arbitrary spans up to 2^20 (heap bitset)

def doubling_size(elements):
    """|A + A| for a sorted tuple of distinct ints."""
    cdef Py_ssize_t k = len(elements)
    cdef long long base = elements[0]
    cdef long long span = elements[k - 1] - base
    cdef Py_ssize_t awords = (span >> 6) + 1
    cdef Py_ssize_t words = ((2 * span) >> 6) + 1
    cdef unsigned long long* amask = <unsigned long long*> malloc(
        awords * sizeof(unsigned long long))
    cdef unsigned long long* acc = <unsigned long long*> malloc(
        words * sizeof(unsigned long long))
    if amask == NULL or acc == NULL:
        free(amask)
        free(acc)
        raise MemoryError()
    memset(amask, 0, awords * sizeof(unsigned long long))
    memset(acc, 0, words * sizeof(unsigned long long))
    cdef Py_ssize_t i, w
    cdef long long off
    cdef int bit
    cdef unsigned long long chunk
    for i in range(k):
        off = elements[i] - base
        amask[off >> 6] |= (<unsigned long long> 1) << (off & 63)
    for i in range(k):
        off = elements[i] - base
        bit = off & 63
        for w in range(awords):
            chunk = amask[w]
            if chunk == 0:
                continue
            acc[w + (off >> 6)] |= chunk << bit
            if bit:
                acc[w + (off >> 6) + 1] |= chunk >> (64 - bit)
    cdef int total = 0
    for w in range(words):
        total += __builtin_popcountll(acc[w])
    free(amask)
    free(acc)
    return total


# ---------------------------------------------------------------------------
# relation rank (generator rows from consecutive equal-sum pairs)

cdef int _lambda_rank_c(long long* e, int k) nogil:
    cdef long long s[MAXPAIRS]
    cdef int pi[MAXPAIRS]
    cdef int pj[MAXPAIRS]
    cdef int n = 0
    cdef int i, j, t, c
    for i in range(k):
        for j in range(i, k):
            s[n] = e[i] + e[j]
            pi[n] = i
            pj[n] = j
            n += 1
    # insertion sort by (sum, i, j); groups equal sums, keeps pair order
    cdef long long ks
    cdef int ki, kj
    for i in range(1, n):
        ks = s[i]; ki = pi[i]; kj = pj[i]
        j = i - 1
        while j >= 0 and (s[j] > ks or (s[j] == ks and (pi[j] > ki or (pi[j] == ki and pj[j] > kj)))):
            s[j + 1] = s[j]; pi[j + 1] = pi[j]; pj[j + 1] = pj[j]
            j -= 1
        s[j + 1] = ks; pi[j + 1] = ki; pj[j + 1] = kj
    cdef long long rows[MAXPAIRS][MAXK]
    cdef int nr = 0
    for t in range(1, n):
        if s[t] == s[t - 1]:
            for c in range(k):
                rows[nr][c] = 0
            rows[nr][pi[t - 1]] += 1
            rows[nr][pj[t - 1]] += 1
            rows[nr][pi[t]] -= 1
            rows[nr][pj[t]] -= 1
            nr += 1
    # fraction-free elimination, early exit at rank k - 2; the cap keeps the
    # intermediate minors well inside int64
    cdef int rank = 0
    cdef int cap = k - 2
    cdef long long prev = 1
    cdef long long p, f
    cdef int col, r, pivot
    for col in range(k):
        if rank >= cap:
            return rank
        pivot = -1
        for r in range(rank, nr):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for c in range(k):
                p = rows[rank][c]
                rows[rank][c] = rows[pivot][c]
                rows[pivot][c] = p
        p = rows[rank][col]
        for r in range(rank + 1, nr):
            f = rows[r][col]
            if f != 0:
                for c in range(col + 1, k):
                    rows[r][c] = (rows[r][c] * p - rows[rank][c] * f) // prev
                rows[r][col] = 0
            elif p != 1 or prev != 1:
                for c in range(col + 1, k):
                    rows[r][c] = (rows[r][c] * p) // prev
        prev = p
        rank += 1
    return rank


def lambda_rank(elements):
    """Rank of the additive-relation vectors of A (at most |A| - 2)."""
    cdef int k = len(elements)
    cdef long long e[MAXK]
    cdef int i
    for i in range(k):
        e[i] = elements[i]
    return _lambda_rank_c(e, k)


def is_one_dimensional(elements):
    cdef int k = len(elements)
    cdef long long e[MAXK]
    cdef int i
    if k < 2:
        return False
    if k == 2:
        return True
    for i in range(k):
        e[i] = elements[i]
    return _lambda_rank_c(e, k) == k - 2


# ---------------------------------------------------------------------------
# slice sweeps: fixed 16-word bitsets, combination odometer in lex order

cdef int _doubling_small(long long* e, int k) nogil:
    cdef unsigned long long amask[8]
    cdef unsigned long long acc[SLICE_WORDS]
    cdef int i, w, bit
    cdef long long off
    cdef unsigned long long chunk
    for w in range(8):
        amask[w] = 0
    for w in range(SLICE_WORDS):
        acc[w] = 0
    for i in range(k):
        off = e[i]
        amask[off >> 6] |= (<unsigned long long> 1) << (off & 63)
    for i in range(k):
        off = e[i]
        bit = off & 63
        for w in range(8):
            chunk = amask[w]
            if chunk == 0:
                continue
            acc[w + (off >> 6)] |= chunk << bit
            if bit:
                acc[w + (off >> 6) + 1] |= chunk >> (64 - bit)
    cdef int total = 0
    for w in range(SLICE_WORDS):
        total += __builtin_popcountll(acc[w])
    return total


cdef bint _advance(long long* e, int r, int m) nogil:
    # e[1..r] is the interior combination; lex successor or done
    cdef int j = r
    while j >= 1 and e[j] == m - 1 - (r - j):
        j -= 1
    if j < 1:
        return False
    e[j] += 1
    cdef int jj
    for jj in range(j + 1, r + 1):
        e[jj] = e[jj - 1] + 1
    return True


def sweep_slice(int k, int m, int t_max):
    """Doubling values T <= t_max realized by some normal-form (gcd 1)
    one-dimensional k-set with min 0 and max m. Sorted ascending."""
    if k < 3:
        raise ValueError("sweep_slice requires k >= 3")
    cdef int r = k - 2
    cdef list out = []
    if m - 1 < r or t_max < 0:
        return out
    cdef long long e[MAXK]
    cdef char* realized = <char*> malloc(t_max + 1)
    if realized == NULL:
        raise MemoryError()
    memset(realized, 0, t_max + 1)
    cdef int i, t
    cdef long long g
    e[0] = 0
    e[k - 1] = m
    for i in range(1, r + 1):
        e[i] = i
    while True:
        g = m
        for i in range(1, r + 1):
            g = _gcd(g, e[i])
            if g == 1:
                break
        if g == 1:
            t = _doubling_small(e, k)
            if t <= t_max and not realized[t]:
                if _lambda_rank_c(e, k) == k - 2:
                    realized[t] = 1
        if not _advance(e, r, m):
            break
    for t in range(t_max + 1):
        if realized[t]:
            out.append(t)
    free(realized)
    return out


def collect_slice(int k, int m, ts):
    """All normal-form one-dimensional k-sets with max m whose doubling is in
    ts, grouped by doubling, in lexicographic order."""
    if k < 3:
        raise ValueError("collect_slice requires k >= 3")
    cdef dict out = {}
    cdef set wanted_py = set(ts)
    for t in sorted(wanted_py):
        out[t] = []
    if not wanted_py:
        return {}
    cdef int t_cap = max(wanted_py)
    cdef int r = k - 2
    if m - 1 < r:
        return {}
    cdef char* wanted = <char*> malloc(t_cap + 1)
    if wanted == NULL:
        raise MemoryError()
    memset(wanted, 0, t_cap + 1)
    for t in wanted_py:
        if t >= 0:
            wanted[<int> t] = 1
    cdef long long e[MAXK]
    cdef int i, tt
    cdef long long g
    e[0] = 0
    e[k - 1] = m
    for i in range(1, r + 1):
        e[i] = i
    while True:
        g = m
        for i in range(1, r + 1):
            g = _gcd(g, e[i])
            if g == 1:
                break
        if g == 1:
            tt = _doubling_small(e, k)
            if tt <= t_cap and wanted[tt]:
                if _lambda_rank_c(e, k) == k - 2:
                    out[tt].append(tuple(e[i] for i in range(k)))
        if not _advance(e, r, m):
            break
    free(wanted)
    return {t: sets for t, sets in out.items() if sets}
