# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled branch-and-bound kernel for minimum biclique partition.

Same algorithm and branch order as _solver_py, with fixed-width bitmask
state: it handles up to 64 vertices and 64 edges and explores the
identical tree, so optimum, witness and node count match the pure-Python
kernel exactly.
"""

from libc.stdint cimport int64_t, uint64_t

import time

DEF MAXN = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef struct State:
    int m
    int best_r
    int64_t nodes
    int64_t node_budget
    double deadline
    bint aborted
    uint64_t all_covered
    uint64_t *adj
    int *eu
    int *ev
    int *eidx          # flattened n x n
    int n
    uint64_t *cur_a
    uint64_t *cur_b
    uint64_t *best_a
    uint64_t *best_b


cdef inline int lowest_bit(uint64_t mask) noexcept:
    return __builtin_ctzll(mask)


cdef inline int64_t pair_bits(State *st, int x, uint64_t side, uint64_t covered) noexcept:
    """Edge bits for the new pairs x times side, or -1 if illegal."""
    if side & ~st.adj[x]:
        return -1
    cdef uint64_t bits = 0
    cdef uint64_t mask = side
    cdef int y, idx
    while mask:
        y = lowest_bit(mask)
        mask &= mask - 1
        idx = st.eidx[x * st.n + y]
        if (covered >> idx) & 1:
            return -1
        bits |= (<uint64_t> 1) << idx
    return <int64_t> bits


cdef void rec(State *st, int k, uint64_t covered):
    cdef int e, u, v, i
    cdef uint64_t ubit, vbit, ebit, a, b, free
    cdef int64_t bits, bits_u, bits_v

    st.nodes += 1
    if st.node_budget and st.nodes >= st.node_budget:
        st.aborted = True
    if st.deadline and st.nodes % 4096 == 0 and time.monotonic() > st.deadline:
        st.aborted = True
    if st.aborted or k >= st.best_r:
        return
    free = ~covered & st.all_covered
    if not free:
        st.best_r = k
        for i in range(k):
            st.best_a[i] = st.cur_a[i]
            st.best_b[i] = st.cur_b[i]
        return
    e = lowest_bit(free)
    u = st.eu[e]
    v = st.ev[e]
    ubit = (<uint64_t> 1) << u
    vbit = (<uint64_t> 1) << v
    ebit = (<uint64_t> 1) << e

    for i in range(k):
        a = st.cur_a[i]
        b = st.cur_b[i]
        if ((a & ubit) and (a & vbit)) or ((b & ubit) and (b & vbit)):
            continue
        if a & ubit:
            bits = pair_bits(st, v, a, covered)
            if bits >= 0:
                st.cur_b[i] = b | vbit
                rec(st, k, covered | <uint64_t> bits)
                st.cur_b[i] = b
        elif b & ubit:
            bits = pair_bits(st, v, b, covered)
            if bits >= 0:
                st.cur_a[i] = a | vbit
                rec(st, k, covered | <uint64_t> bits)
                st.cur_a[i] = a
        elif a & vbit:
            bits = pair_bits(st, u, a, covered)
            if bits >= 0:
                st.cur_b[i] = b | ubit
                rec(st, k, covered | <uint64_t> bits)
                st.cur_b[i] = b
        elif b & vbit:
            bits = pair_bits(st, u, b, covered)
            if bits >= 0:
                st.cur_a[i] = a | ubit
                rec(st, k, covered | <uint64_t> bits)
                st.cur_a[i] = a
        else:
            bits_u = pair_bits(st, u, b, covered)
            if bits_u >= 0:
                bits_v = pair_bits(st, v, a, covered | <uint64_t> bits_u)
                if bits_v >= 0:
                    st.cur_a[i] = a | ubit
                    st.cur_b[i] = b | vbit
                    rec(st, k, covered | <uint64_t> bits_u | <uint64_t> bits_v | ebit)
                    st.cur_a[i] = a
                    st.cur_b[i] = b
            bits_v = pair_bits(st, v, b, covered)
            if bits_v >= 0:
                bits_u = pair_bits(st, u, a, covered | <uint64_t> bits_v)
                if bits_u >= 0:
                    st.cur_a[i] = a | vbit
                    st.cur_b[i] = b | ubit
                    rec(st, k, covered | <uint64_t> bits_u | <uint64_t> bits_v | ebit)
                    st.cur_a[i] = a
                    st.cur_b[i] = b

    if k + 1 < st.best_r:
        st.cur_a[k] = ubit
        st.cur_b[k] = vbit
        rec(st, k + 1, covered | ebit)
        st.cur_a[k] = 0
        st.cur_b[k] = 0


def search(
    int n,
    list edges,
    list adj,
    list init_a,
    list init_b,
    node_budget=0,
    time_budget_s=0.0,
):
    """Drop-in replacement for splitbp._solver_py.search (n, m <= 64)."""
    cdef int m = len(edges)
    cdef int cap = len(init_a)
    if n > MAXN or m > MAXN or cap > MAXN:
        raise ValueError("compiled kernel handles at most 64 vertices/edges")

    cdef uint64_t[MAXN] adj_c
    cdef uint64_t[MAXN] cur_a
    cdef uint64_t[MAXN] cur_b
    cdef uint64_t[MAXN] best_a
    cdef uint64_t[MAXN] best_b
    cdef int[MAXN] eu
    cdef int[MAXN] ev
    cdef int[MAXN * MAXN] eidx

    cdef int i, u, v
    for i in range(n):
        adj_c[i] = <uint64_t> adj[i]
    for i in range(n * n):
        eidx[i] = -1
    for i in range(m):
        u, v = edges[i]
        eu[i] = u
        ev[i] = v
        eidx[u * n + v] = i
        eidx[v * n + u] = i
    for i in range(cap):
        best_a[i] = <uint64_t> init_a[i]
        best_b[i] = <uint64_t> init_b[i]
        cur_a[i] = 0
        cur_b[i] = 0

    cdef State st
    st.m = m
    st.n = n
    st.best_r = cap
    st.nodes = 0
    st.node_budget = int(node_budget)
    st.deadline = time.monotonic() + time_budget_s if time_budget_s > 0 else 0.0
    st.aborted = False
    st.all_covered = ((<uint64_t> 1) << m) - 1 if m else 0
    st.adj = adj_c
    st.eu = eu
    st.ev = ev
    st.eidx = eidx
    st.cur_a = cur_a
    st.cur_b = cur_b
    st.best_a = best_a
    st.best_b = best_b

    if m and cap:
        rec(&st, 0, 0)

    out_a = [best_a[i] for i in range(st.best_r)]
    out_b = [best_b[i] for i in range(st.best_r)]
    return st.best_r, out_a, out_b, st.nodes, not st.aborted
