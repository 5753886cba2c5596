# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on 64-bit masks. Mirrors ``_pykernels`` exactly."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, realloc, free

BACKEND = "cython"
MAX_BITS = 64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef uint64_t ONE = 1


cdef struct Adj:
    int n
    int* deg
    int* nbr      # n * 64
    int* eid      # n * 64


cdef Adj _make_adj(int n, inc_by_edge):
    cdef Adj a
    cdef int v, k
    a.n = n
    a.deg = <int*> malloc(sizeof(int) * (n if n > 0 else 1))
    a.nbr = <int*> malloc(sizeof(int) * 64 * (n if n > 0 else 1))
    a.eid = <int*> malloc(sizeof(int) * 64 * (n if n > 0 else 1))
    for v in range(n):
        row = inc_by_edge[v]
        a.deg[v] = len(row)
        for k in range(len(row)):
            a.nbr[v * 64 + k] = row[k][0]
            a.eid[v * 64 + k] = row[k][1]
    return a


cdef void _free_adj(Adj a):
    free(a.deg)
    free(a.nbr)
    free(a.eid)


cdef struct PmState:
    Adj* adj
    uint64_t* out
    int64_t size
    int64_t count
    int64_t cap
    int store
    int oom


cdef bint _pm_rec(PmState* st, uint64_t remaining, uint64_t chosen) nogil:
    cdef int v, k, u
    cdef uint64_t rest
    cdef uint64_t* grown
    if remaining == 0:
        if st.store and st.count < st.cap:
            if st.count == st.size:
                grown = <uint64_t*> realloc(st.out, sizeof(uint64_t) * st.size * 2)
                if grown == NULL:
                    st.oom = 1
                    return False
                st.out = grown
                st.size *= 2
            st.out[st.count] = chosen
        st.count += 1
        if st.store:
            return st.count <= st.cap
        return st.count < st.cap
    v = ctz64(remaining)
    rest = remaining & ~(ONE << v)
    for k in range(st.adj.deg[v]):
        u = st.adj.nbr[v * 64 + k]
        if (rest >> u) & ONE:
            if not _pm_rec(st, rest & ~(ONE << u), chosen | (ONE << st.adj.eid[v * 64 + k])):
                return False
    return True


def enumerate_pms(int n, inc_by_edge, cap):
    if n % 2:
        return []
    cdef Adj a = _make_adj(n, inc_by_edge)
    cdef PmState st
    cdef int64_t c = int(cap)
    cdef uint64_t full = (ONE << n) - ONE if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    st.adj = &a
    st.count = 0
    st.cap = c
    st.store = 1
    st.oom = 0
    st.size = 1024
    st.out = <uint64_t*> malloc(sizeof(uint64_t) * st.size)
    cdef bint ok
    try:
        with nogil:
            ok = _pm_rec(&st, full, 0)
        if st.oom:
            raise MemoryError("perfect matching buffer")
        if not ok:
            return None
        return [st.out[i] for i in range(st.count)]
    finally:
        free(st.out)
        _free_adj(a)


def count_pms(int n, inc_by_edge, uint64_t covered, cap):
    cdef uint64_t full = (ONE << n) - ONE if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t remaining = full & ~covered
    if popcount64(remaining) % 2:
        return 0
    cdef Adj a = _make_adj(n, inc_by_edge)
    cdef PmState st
    st.adj = &a
    st.count = 0
    st.cap = max(int(cap), 1)
    st.store = 0
    st.oom = 0
    st.size = 0
    st.out = NULL
    try:
        with nogil:
            _pm_rec(&st, remaining, 0)
        return st.count
    finally:
        _free_adj(a)


cdef int _cycles(uint64_t x, int* ea, int* eb, uint64_t* inc, uint64_t* out) nogil:
    cdef int k = 0, e0, e, start, v
    cdef uint64_t comp, nxt
    while x:
        e0 = ctz64(x)
        start = ea[e0]
        v = eb[e0]
        comp = ONE << e0
        e = e0
        while v != start:
            nxt = x & inc[v] & ~(ONE << e)
            e = ctz64(nxt)
            comp |= ONE << e
            v = eb[e] if ea[e] == v else ea[e]
        out[k] = comp
        k += 1
        x &= ~comp
    return k


def cycle_components(uint64_t x, edge_ends, inc):
    cdef int m = len(edge_ends), nv = len(inc), i, k
    cdef int ea[64]
    cdef int eb[64]
    cdef uint64_t cinc[64]
    cdef uint64_t out[32]
    for i in range(m):
        ea[i] = edge_ends[i][0]
        eb[i] = edge_ends[i][1]
    for i in range(nv):
        cinc[i] = inc[i]
    k = _cycles(x, ea, eb, cinc, out)
    return [out[i] for i in range(k)]


def nice_cycle_masks(pms, edge_ends, inc):
    cdef int m = len(edge_ends), nv = len(inc), i, j, k, t
    cdef int ea[64]
    cdef int eb[64]
    cdef uint64_t cinc[64]
    cdef uint64_t out[32]
    cdef int npm = len(pms)
    cdef uint64_t* p = <uint64_t*> malloc(sizeof(uint64_t) * (npm if npm > 0 else 1))
    found = set()
    for i in range(m):
        ea[i] = edge_ends[i][0]
        eb[i] = edge_ends[i][1]
    for i in range(nv):
        cinc[i] = inc[i]
    for i in range(npm):
        p[i] = pms[i]
    try:
        for i in range(npm):
            for j in range(i + 1, npm):
                k = _cycles(p[i] ^ p[j], ea, eb, cinc, out)
                for t in range(k):
                    found.add(out[t])
        return found
    finally:
        free(p)


cdef struct HsState:
    uint64_t* cons
    int ncons
    uint64_t best
    int best_size
    int found
    int budget


cdef int _pick(HsState* st, uint64_t chosen, uint64_t forbidden, uint64_t* branch) nogil:
    # -1: some unhit constraint is fully forbidden; branch[0] == 0: all hit
    cdef int i, s, best_size = 0, packed = 0
    cdef uint64_t c, r, best = 0, used = 0
    for i in range(st.ncons):
        c = st.cons[i]
        if c & chosen:
            continue
        r = c & ~forbidden
        if r == 0:
            return -1
        s = popcount64(r)
        if best == 0 or s < best_size:
            best = r
            best_size = s
        if (r & used) == 0:
            used |= r
            packed += 1
    branch[0] = best
    return packed


cdef void _min_rec(HsState* st, uint64_t chosen, int size, uint64_t forbidden) nogil:
    cdef uint64_t r = 0, bit
    cdef int lb = _pick(st, chosen, forbidden, &r)
    if lb < 0:
        return
    if r == 0:
        st.best = chosen
        st.best_size = size
        st.found = 1
        return
    if size + (lb if lb > 1 else 1) >= st.best_size:
        return
    bit = r & (~r + ONE)
    _min_rec(st, chosen | bit, size + 1, forbidden)
    _min_rec(st, chosen, size, forbidden | bit)


cdef bint _feas_rec(HsState* st, uint64_t chosen, int size, uint64_t forbidden) nogil:
    cdef uint64_t r = 0, bit
    cdef int lb = _pick(st, chosen, forbidden, &r)
    if lb < 0:
        return False
    if r == 0:
        st.best = chosen
        st.found = 1
        return True
    if size + (lb if lb > 1 else 1) > st.budget:
        return False
    bit = r & (~r + ONE)
    if _feas_rec(st, chosen | bit, size + 1, forbidden):
        return True
    return _feas_rec(st, chosen, size, forbidden | bit)


cdef HsState _hs_init(constraints):
    cdef HsState st
    cdef int i
    st.ncons = len(constraints)
    st.cons = <uint64_t*> malloc(sizeof(uint64_t) * (st.ncons if st.ncons > 0 else 1))
    for i in range(st.ncons):
        st.cons[i] = constraints[i]
    st.best = 0
    st.best_size = 0
    st.found = 0
    st.budget = 0
    return st


def min_hitting_set(constraints, int limit):
    cdef HsState st = _hs_init(constraints)
    st.best_size = limit
    try:
        with nogil:
            _min_rec(&st, 0, 0, 0)
        return st.best if st.found else None
    finally:
        free(st.cons)


def feasible_hitting_set(constraints, uint64_t forbidden, int budget):
    cdef HsState st = _hs_init(constraints)
    st.budget = budget
    cdef bint ok
    try:
        with nogil:
            ok = _feas_rec(&st, 0, 0, forbidden)
        return st.best if ok else None
    finally:
        free(st.cons)
