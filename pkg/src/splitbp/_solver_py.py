"""Pure-Python branch-and-bound kernel for minimum biclique partition.

Reference implementation of the search also provided compiled in
_solver_core; both must explore the identical tree. State is bitmask
based: vertex sets are ints with bit v set for vertex v (0-based), edge
coverage is one bit per edge in the canonical sorted edge order.

Branching: take the lowest uncovered edge (u, v); try to place it into
each open biclique in creation order (the one legal absorption when an
endpoint is already placed, otherwise both orientations), then open a new
biclique ({u}, {v}). A node is pruned when the open-biclique count is no
longer below the incumbent.
"""

from __future__ import annotations

import time


def search(
    n: int,
    edges: list[tuple[int, int]],
    adj: list[int],
    init_a: list[int],
    init_b: list[int],
    node_budget: int = 0,
    time_budget_s: float = 0.0,
):
    """Exhaust all partitions smaller than the initial incumbent.

    Returns (best_r, best_a, best_b, nodes, exhausted); exhausted is False
    when a budget stopped the search early, in which case the incumbent is
    only an upper bound.
    """
    m = len(edges)
    eidx = [[-1] * n for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        eidx[u][v] = i
        eidx[v][u] = i
    all_covered = (1 << m) - 1

    best_r = len(init_a)
    best_a = list(init_a)
    best_b = list(init_b)
    cap = best_r
    cur_a = [0] * cap
    cur_b = [0] * cap

    nodes = 0
    aborted = False
    deadline = time.monotonic() + time_budget_s if time_budget_s > 0 else 0.0

    def pair_bits(x: int, side: int, covered: int) -> int:
        """Edge bits for the new pairs x times side, or -1 if illegal."""
        if side & ~adj[x]:
            return -1
        bits = 0
        mask = side
        while mask:
            low = mask & -mask
            idx = eidx[x][low.bit_length() - 1]
            if covered >> idx & 1:
                return -1
            bits |= 1 << idx
            mask ^= low
        return bits

    def rec(k: int, covered: int) -> None:
        nonlocal nodes, best_r, aborted
        nodes += 1
        if node_budget and nodes >= node_budget:
            aborted = True
        if deadline and nodes % 4096 == 0 and time.monotonic() > deadline:
            aborted = True
        if aborted or k >= best_r:
            return
        free = ~covered & all_covered
        if not free:
            best_r = k
            best_a[:] = cur_a[:k]
            best_b[:] = cur_b[:k]
            return
        e = (free & -free).bit_length() - 1
        u, v = edges[e]
        ubit, vbit = 1 << u, 1 << v
        ebit = 1 << e

        for i in range(k):
            a, b = cur_a[i], cur_b[i]
            in_au, in_bu = a & ubit, b & ubit
            in_av, in_bv = a & vbit, b & vbit
            if (in_au and in_av) or (in_bu and in_bv):
                continue
            if in_au:
                bits = pair_bits(v, a, covered)
                if bits >= 0:
                    cur_b[i] = b | vbit
                    rec(k, covered | bits)
                    cur_b[i] = b
            elif in_bu:
                bits = pair_bits(v, b, covered)
                if bits >= 0:
                    cur_a[i] = a | vbit
                    rec(k, covered | bits)
                    cur_a[i] = a
            elif in_av:
                bits = pair_bits(u, a, covered)
                if bits >= 0:
                    cur_b[i] = b | ubit
                    rec(k, covered | bits)
                    cur_b[i] = b
            elif in_bv:
                bits = pair_bits(u, b, covered)
                if bits >= 0:
                    cur_a[i] = a | ubit
                    rec(k, covered | bits)
                    cur_a[i] = a
            else:
                bits_u = pair_bits(u, b, covered)
                if bits_u >= 0:
                    bits_v = pair_bits(v, a, covered | bits_u)
                    if bits_v >= 0:
                        cur_a[i] = a | ubit
                        cur_b[i] = b | vbit
                        rec(k, covered | bits_u | bits_v | ebit)
                        cur_a[i], cur_b[i] = a, b
                bits_v = pair_bits(v, b, covered)
                if bits_v >= 0:
                    bits_u = pair_bits(u, a, covered | bits_v)
                    if bits_u >= 0:
                        cur_a[i] = a | vbit
                        cur_b[i] = b | ubit
                        rec(k, covered | bits_u | bits_v | ebit)
                        cur_a[i], cur_b[i] = a, b

        if k + 1 < best_r:
            cur_a[k] = ubit
            cur_b[k] = vbit
            rec(k + 1, covered | ebit)
            cur_a[k] = cur_b[k] = 0

    if m and cap:
        rec(0, 0)
    return best_r, best_a[:best_r], best_b[:best_r], nodes, not aborted
