"""Numba kernels for the fixed-point solvers.

Cop configurations are multisets of size k over an alphabet of A symbols
(vertices, or ``2*v + flag`` in the push game), indexed by their colex rank
in the combinatorial number system.  For each configuration the kernels keep
a bitset over robber vertices (``nw`` 64-bit words).
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

ONE = np.uint64(1)
ZERO = np.uint64(0)


def binomial_table(top: int, k: int) -> np.ndarray:
    t = np.zeros((top + 1, k + 2), dtype=np.int64)
    for a in range(top + 1):
        t[a, 0] = 1
        for b in range(1, min(a, k + 1) + 1):
            t[a, b] = t[a - 1, b - 1] + (t[a - 1, b] if b <= a - 1 else 0)
    return t


def multiset_count(a: int, k: int) -> int:
    from math import comb

    return comb(a + k - 1, k) if k > 0 else 1


@njit(cache=True)
def rank_sorted(items, k, binom):
    r = 0
    for i in range(k):
        r += binom[items[i] + i, i + 1]
    return r


@njit(cache=True)
def unrank_into(rank, k, binom, out):
    rem = rank
    for i in range(k - 1, -1, -1):
        b = i
        while binom[b + 1, i + 1] <= rem:
            b += 1
        rem -= binom[b, i + 1]
        out[i] = b - i


@njit(cache=True)
def build_configs(count, k, binom):
    out = np.empty((count, max(k, 1)), dtype=np.int64)
    for t in range(count):
        unrank_into(t, k, binom, out[t])
    return out


@njit(cache=True)
def _sort_small(a, k):
    for i in range(1, k):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


@njit(cache=True)
def occupancy(configs, k, shift, nw):
    out = np.zeros((configs.shape[0], nw), dtype=np.uint64)
    for t in range(configs.shape[0]):
        for i in range(k):
            v = configs[t, i] >> shift
            out[t, v >> 6] |= ONE << np.uint64(v & 63)
    return out


@njit(cache=True, parallel=True)
def dilate(W, cmask, n):
    """DW[t] = union of closed neighbourhoods of the vertices in W[t]."""
    N, nw = W.shape
    out = np.zeros((N, nw), dtype=np.uint64)
    for t in prange(N):
        for v in range(n):
            if (W[t, v >> 6] >> np.uint64(v & 63)) & ONE:
                for w in range(nw):
                    out[t, w] |= cmask[v, w]
    return out


@njit(cache=True)
def surrounded(occ, nmask, n):
    """S[t] = vertices whose open neighbourhood is inside occ[t]."""
    N, nw = occ.shape
    out = np.zeros((N, nw), dtype=np.uint64)
    for t in range(N):
        for v in range(n):
            ok = True
            for w in range(nw):
                if nmask[v, w] & ~occ[t, w]:
                    ok = False
                    break
            if ok:
                out[t, v >> 6] |= ONE << np.uint64(v & 63)
    return out


@njit(cache=True)
def _groups(items, k, gstart, glen):
    ng = 0
    for i in range(k):
        if i == 0 or items[i] != items[i - 1]:
            gstart[ng] = i
            glen[ng] = 1
            ng += 1
        else:
            glen[ng - 1] += 1
    return ng


@njit(cache=True)
def count_moves(configs, k, shift, nbr_ptr, binom_small):
    """Number of grouped cop moves summed over all configurations."""
    total = 0
    gstart = np.empty(k, dtype=np.int64)
    glen = np.empty(k, dtype=np.int64)
    for t in range(configs.shape[0]):
        ng = _groups(configs[t], k, gstart, glen)
        c = 1
        for g in range(ng):
            v = configs[t, gstart[g]] >> shift
            d = nbr_ptr[v + 1] - nbr_ptr[v]
            c *= binom_small[d + glen[g] - 1, glen[g]]
        total += c
    return total


@njit(cache=True, parallel=True)
def cheat_sweep(configs, k, shift, occ, Wp, DWp, nbr_ptr, nbr_idx, nmask, binom, mode, budget):
    """One Jacobi sweep of the cheating-robot cop attractor.

    mode 0: plain game; mode 1: pushes forbidden; mode 2: push flags with
    at most ``budget`` flagged cops.  Returns the new robber-winning bitsets.
    """
    N, nw = Wp.shape
    Wn = np.zeros((N, nw), dtype=np.uint64)
    for t in prange(N):
        alive = False
        for w in range(nw):
            if Wp[t, w]:
                alive = True
        if not alive:
            continue
        items = configs[t]
        cw = np.zeros(nw, dtype=np.uint64)
        gstart = np.empty(k, dtype=np.int64)
        glen = np.empty(k, dtype=np.int64)
        choice = np.zeros(k, dtype=np.int64)
        vert = np.empty(k, dtype=np.int64)
        flag = np.empty(k, dtype=np.int64)
        dest = np.empty(k, dtype=np.int64)
        buf = np.empty(k, dtype=np.int64)
        D = np.zeros(nw, dtype=np.uint64)
        L = np.zeros(nw, dtype=np.uint64)
        for i in range(k):
            vert[i] = items[i] >> shift
            flag[i] = items[i] & 1 if shift else 0
        ng = _groups(items, k, gstart, glen)
        while True:
            for i in range(k):
                v = vert[i]
                dest[i] = nbr_idx[nbr_ptr[v] + choice[i]]
                buf[i] = (dest[i] << shift) | flag[i]
            _sort_small(buf, k)
            tp = rank_sorted(buf, k, binom)
            for w in range(nw):
                cw[w] |= ~DWp[tp, w] & ~occ[tp, w]
            for i in range(k):
                d = dest[i]
                if d == vert[i]:
                    continue
                if (occ[t, d >> 6] >> np.uint64(d & 63)) & ONE:
                    continue
                if (cw[d >> 6] >> np.uint64(d & 63)) & ONE:
                    continue
                dup = False
                for j in range(i):
                    if dest[j] == d:
                        dup = True
                if dup:
                    continue
                for w in range(nw):
                    D[w] = ZERO
                for j in range(k):
                    if dest[j] == d:
                        D[vert[j] >> 6] |= ONE << np.uint64(vert[j] & 63)
                empty = True
                for w in range(nw):
                    L[w] = nmask[d, w] & ~D[w] & ~occ[tp, w]
                    if L[w]:
                        empty = False
                bit = ONE << np.uint64(d & 63)
                if empty:
                    cw[d >> 6] |= bit
                    continue
                if mode == 1:
                    continue
                tq = tp
                if mode == 2:
                    cnt = 0
                    for j in range(k):
                        f = flag[j]
                        if dest[j] == d:
                            f = 1
                        cnt += f
                        buf[j] = (dest[j] << 1) | f
                    if cnt > budget:
                        continue
                    _sort_small(buf, k)
                    tq = rank_sorted(buf, k, binom)
                safe = False
                for w in range(nw):
                    if L[w] & Wp[tq, w]:
                        safe = True
                if not safe:
                    cw[d >> 6] |= bit
            done = True
            for w in range(nw):
                if Wp[t, w] & ~cw[w]:
                    done = False
            if done:
                break
            # advance the odometer: multiset of destinations per group
            g = 0
            while g < ng:
                s = gstart[g]
                e = s + glen[g]
                v = vert[s]
                dmax = nbr_ptr[v + 1] - nbr_ptr[v] - 1
                j = e - 1
                while j >= s and choice[j] == dmax:
                    j -= 1
                if j >= s:
                    choice[j] += 1
                    for x in range(j + 1, e):
                        choice[x] = choice[j]
                    break
                for x in range(s, e):
                    choice[x] = 0
                g += 1
            if g == ng:
                break
        for w in range(nw):
            Wn[t, w] = Wp[t, w] & ~cw[w]
    return Wn


@njit(cache=True)
def record_rank(Wp, Wn, rank, step, n):
    changed = 0
    for t in range(Wp.shape[0]):
        for v in range(n):
            sh = np.uint64(v & 63)
            if ((Wp[t, v >> 6] >> sh) & ONE) and not ((Wn[t, v >> 6] >> sh) & ONE):
                rank[t, v] = step
                changed += 1
    return changed


@njit(cache=True)
def _insert_rank(A, j, u, binom, tmp):
    # rank of sorted(A[:j] + [u])
    p = 0
    placed = False
    for i in range(j):
        if not placed and u < A[i]:
            tmp[p] = u
            p += 1
            placed = True
        tmp[p] = A[i]
        p += 1
    if not placed:
        tmp[p] = u
    return rank_sorted(tmp, j + 1, binom)


@njit(cache=True, parallel=True)
def _succ_or_layer(Hn, j, k, counts, tabs, offs, nbr_ptr, nbr_idx, binom, nw):
    mb = counts[k - j]
    mb_next = counts[k - j - 1]
    size = counts[j] * mb
    Hj = np.zeros((size, nw), dtype=np.uint64)
    for idx in prange(size):
        a = idx // mb
        b = idx % mb
        A = tabs[offs[j] + a * j: offs[j] + (a + 1) * j]
        B = tabs[offs[k - j] + b * (k - j): offs[k - j] + (b + 1) * (k - j)]
        rb = rank_sorted(B[1:], k - j - 1, binom)
        tmp = np.empty(j + 1, dtype=np.int64)
        v = B[0]
        for p in range(nbr_ptr[v], nbr_ptr[v + 1]):
            ra = _insert_rank(A, j, nbr_idx[p], binom, tmp)
            src = ra * mb_next + rb
            for w in range(nw):
                Hj[idx, w] |= Hn[src, w]
    return Hj


class SuccessorOr:
    """G[T] = OR of F[T'] over all one-round cop moves T -> T'.

    Moves cops one at a time through (moved, unmoved) intermediate multisets,
    which costs roughly C(2n + k - 1, k) * degree instead of the product of
    neighbourhood sizes per configuration.
    """

    def __init__(self, n, k, nbr_ptr, nbr_idx, binom):
        self.n, self.k = n, k
        self.nbr_ptr, self.nbr_idx, self.binom = nbr_ptr, nbr_idx, binom
        counts = np.array([multiset_count(n, s) for s in range(k + 1)], dtype=np.int64)
        offs = np.zeros(k + 2, dtype=np.int64)
        for s in range(k + 1):
            offs[s + 1] = offs[s] + counts[s] * s
        tabs = np.zeros(max(int(offs[k + 1]), 1), dtype=np.int64)
        for s in range(1, k + 1):
            tab = build_configs(int(counts[s]), s, binom)
            tabs[offs[s]: offs[s + 1]] = tab.reshape(-1)
        self.counts, self.offs, self.tabs = counts, offs, tabs

    def work(self) -> int:
        avg = self.nbr_idx.shape[0] / self.n
        return int(sum(int(self.counts[j]) * int(self.counts[self.k - j]) for j in range(self.k)) * avg)

    def __call__(self, F):
        H = F
        nw = F.shape[1]
        for j in range(self.k - 1, -1, -1):
            H = _succ_or_layer(H, j, self.k, self.counts, self.tabs, self.offs,
                               self.nbr_ptr, self.nbr_idx, self.binom, nw)
        return H
