# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure scan kernel.

Same obstruction tables and subset layouts as the fallback (imported
from it, so the two backends can only differ in loop code), same
three routes, C speed.  ``scan`` and ``routes`` match the fallback's
signatures and results exactly.
"""

from libc.stdlib cimport calloc, free, malloc

from . import _pyscan


cdef int _POP[256]
cdef int _i
for _i in range(256):
    _POP[_i] = bin(_i).count("1")

# obstruction tables as flat bitsets: code -> bad
cdef unsigned long long _BAD4[1]
cdef unsigned long long _BAD5[16]
cdef unsigned long long _BAD6[512]

cdef void _fill_table(unsigned long long* dst, object codes):
    cdef unsigned long long code
    for code in codes:
        dst[code >> 6] |= (<unsigned long long> 1) << (code & 63)

_fill_table(_BAD4, _pyscan._TABLES[4])
_fill_table(_BAD5, _pyscan._TABLES[5])
_fill_table(_BAD6, _pyscan._TABLES[6])


cdef inline bint _bad(int k, unsigned long long code) nogil:
    if k == 4:
        return (_BAD4[code >> 6] >> (code & 63)) & 1
    if k == 5:
        return (_BAD5[code >> 6] >> (code & 63)) & 1
    return (_BAD6[code >> 6] >> (code & 63)) & 1


cdef struct Layout:
    int nrows4, nrows5, nrows6
    int* rows4          # nrows4 * 6 global bit positions
    int* rows5          # nrows5 * 10
    int* rows6          # nrows6 * 15


cdef int _build_layout(int n, Layout* lay) except -1:
    lay.nrows4 = lay.nrows5 = lay.nrows6 = 0
    lay.rows4 = lay.rows5 = lay.rows6 = NULL
    cdef int k, i, j
    cdef int* dst
    for k, rows in _pyscan._subset_layouts(n):
        dst = <int*> malloc(len(rows) * (k * (k - 1) // 2) * sizeof(int))
        if dst == NULL:
            raise MemoryError()
        i = 0
        for row in rows:
            for j in row:
                dst[i] = j
                i += 1
        if k == 4:
            lay.nrows4 = len(rows)
            lay.rows4 = dst
        elif k == 5:
            lay.nrows5 = len(rows)
            lay.rows5 = dst
        else:
            lay.nrows6 = len(rows)
            lay.rows6 = dst
    return 0


cdef void _free_layout(Layout* lay):
    free(lay.rows4)
    free(lay.rows5)
    free(lay.rows6)


cdef bint _degree_route(int n, int* degs) nogil:
    # degs sorted nonincreasing
    cdef int m = 0
    cdef int k, i, head, tail, t
    while m < n and degs[m] >= m:
        m += 1
    head = 0
    for k in range(1, m + 1):
        head += degs[k - 1]
        tail = 0
        for i in range(k, n):
            t = degs[i]
            tail += k if t > k else t
        if k * (k - 1) + tail - head > 1:
            return 0
    return 1


cdef bint _obstruction_route(unsigned long long mask, Layout* lay) nogil:
    cdef int r, i
    cdef unsigned long long code
    cdef int* row
    for r in range(lay.nrows4):
        row = lay.rows4 + r * 6
        code = 0
        for i in range(6):
            code |= ((mask >> row[i]) & 1) << i
        if _bad(4, code):
            return 0
    for r in range(lay.nrows5):
        row = lay.rows5 + r * 10
        code = 0
        for i in range(10):
            code |= ((mask >> row[i]) & 1) << i
        if _bad(5, code):
            return 0
    for r in range(lay.nrows6):
        row = lay.rows6 + r * 15
        code = 0
        for i in range(15):
            code |= ((mask >> row[i]) & 1) << i
        if _bad(6, code):
            return 0
    return 1


cdef bint _reduction_route(int n, unsigned long long mask) nogil:
    cdef int adj[8]
    cdef int nxt[8]
    cdef int degs[8]
    cdef int keep[8]
    cdef int v, u, bit, i, j, z, w, kept, u1, u2, z1, z2
    cdef int drop_len, tops, top
    cdef int drop[4]
    cdef bint found
    for v in range(n):
        adj[v] = 0
    bit = 0
    for v in range(n):
        for u in range(v):
            if (mask >> bit) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    while n > 3:
        for v in range(n):
            degs[v] = _POP[adj[v]]
        drop_len = 0
        for v in range(n):
            if degs[v] == 0 or degs[v] == n - 1:
                drop[0] = v
                drop_len = 1
                break
        if drop_len == 0:
            tops = 0
            top = -1
            for v in range(n):
                if degs[v] == n - 2:
                    tops += 1
                    top = v
            if tops == 1:
                for z in range(n):
                    if degs[z] == 1 and (adj[z] >> top) & 1:
                        drop[0] = z
                        drop_len = 1
                        break
        if drop_len == 0:
            for v in range(n):
                if degs[v] != n - 2:
                    continue
                w = -1
                for u in range(n):
                    if u != v and not (adj[v] >> u) & 1:
                        w = u
                        break
                found = 1
                for u in range(n):
                    if u != v and u != w and degs[u] <= degs[w]:
                        found = 0
                        break
                if found:
                    drop[0] = v
                    drop_len = 1
                    break
        if drop_len == 0:
            for z1 in range(n):
                if degs[z1] != 1:
                    continue
                for z2 in range(z1 + 1, n):
                    if degs[z2] != 1:
                        continue
                    u1 = -1
                    u2 = -1
                    for u in range(n):
                        if (adj[z1] >> u) & 1:
                            u1 = u
                        if (adj[z2] >> u) & 1:
                            u2 = u
                    if (
                        u1 != u2
                        and degs[u1] == n - 2
                        and degs[u2] == n - 2
                        and (adj[u1] >> u2) & 1
                        and not (adj[u1] >> z2) & 1
                        and not (adj[u2] >> z1) & 1
                    ):
                        drop[0] = z1
                        drop[1] = u1
                        drop[2] = u2
                        drop[3] = z2
                        drop_len = 4
                        break
                if drop_len:
                    break
        if drop_len == 0:
            return 0
        kept = 0
        for v in range(n):
            found = 0
            for i in range(drop_len):
                if drop[i] == v:
                    found = 1
                    break
            if not found:
                keep[kept] = v
                kept += 1
        for i in range(kept):
            nxt[i] = 0
            for j in range(kept):
                if (adj[keep[i]] >> keep[j]) & 1:
                    nxt[i] |= 1 << j
        for i in range(kept):
            adj[i] = nxt[i]
        n = kept
    return 1


cdef void _sorted_degrees(int n, unsigned long long mask, int* out) nogil:
    cdef int v, u, bit, i, j, t
    for v in range(n):
        out[v] = 0
    bit = 0
    for v in range(n):
        for u in range(v):
            if (mask >> bit) & 1:
                out[u] += 1
                out[v] += 1
            bit += 1
    # insertion sort, descending
    for i in range(1, n):
        t = out[i]
        j = i - 1
        while j >= 0 and out[j] < t:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = t


def routes(int n, mask):
    """The three membership verdicts for one graph."""
    cdef unsigned long long m = mask
    cdef int degs[8]
    cdef Layout lay
    if n < 1 or n > 8:
        raise ValueError(f"order out of kernel range: {n}")
    _sorted_degrees(n, m, degs)
    _build_layout(n, &lay)
    try:
        return (
            bool(_degree_route(n, degs)),
            bool(_obstruction_route(m, &lay)),
            bool(_reduction_route(n, m)),
        )
    finally:
        _free_layout(&lay)


def scan(int n):
    """Walk every mask of order n and cross-check all routes.

    Returns (total, wt_count, disagreements, complement_mismatches,
    wt_degree_tuples, first_disagreeing_mask_or_None).
    """
    if n < 1 or n > 8:
        raise ValueError(f"order out of kernel range: {n}")
    cdef int nbits = n * (n - 1) // 2
    cdef unsigned long long total = (<unsigned long long> 1) << nbits
    cdef unsigned long long full = total - 1
    cdef unsigned long long mask
    cdef int degs[8]
    cdef int cdegs[8]
    cdef int v, i
    cdef unsigned long long key, ckey
    cdef long long wt_count = 0, disagreements = 0, comp_mismatch = 0
    cdef long long first = -1
    cdef bint r1, r2, r3, rc
    cdef Layout lay
    # degree-route memo indexed by the packed sorted degree tuple
    cdef unsigned char* memo = <unsigned char*> calloc((<size_t> 1) << (3 * n), 1)
    if memo == NULL:
        raise MemoryError()
    _build_layout(n, &lay)
    try:
        for mask in range(total):
            _sorted_degrees(n, mask, degs)
            key = 0
            for v in range(n):
                key |= (<unsigned long long> degs[v]) << (3 * v)
            if memo[key] == 0:
                memo[key] = 1 if _degree_route(n, degs) else 2
            r1 = memo[key] == 1
            r2 = _obstruction_route(mask, &lay)
            r3 = _reduction_route(n, mask)
            if r1 != r2 or r1 != r3:
                disagreements += 1
                if first < 0:
                    first = <long long> mask
            if r1:
                wt_count += 1
            for v in range(n):
                cdegs[v] = n - 1 - degs[n - 1 - v]
            ckey = 0
            for v in range(n):
                ckey |= (<unsigned long long> cdegs[v]) << (3 * v)
            if memo[ckey] == 0:
                memo[ckey] = 1 if _degree_route(n, cdegs) else 2
            rc = memo[ckey] == 1
            if r1 != rc:
                comp_mismatch += 1
        seqs = set()
        for key in range((<unsigned long long> 1) << (3 * n)):
            if memo[key] == 1:
                seqs.add(
                    tuple((key >> (3 * v)) & 7 for v in range(n))
                )
        return (
            int(total),
            int(wt_count),
            int(disagreements),
            int(comp_mismatch),
            frozenset(seqs),
            None if first < 0 else int(first),
        )
    finally:
        free(memo)
        _free_layout(&lay)
