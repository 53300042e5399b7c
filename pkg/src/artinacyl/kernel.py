"""Bulk ball counting in the Coxeter quotient.

Breadth-first enumeration of group elements as exact integer coordinate
vectors in the reflection representation (see `reflection`), counting
distinct elements up to a cap.  Two interchangeable backends:

  * a numba @njit kernel (default when numba is importable), and
  * a pure-numpy level-BFS fallback,

selected by the environment variable ARTINACYL_KERNEL=numba|numpy.

The numba path exploits structural facts of the reflection action: left
multiplication by a generator changes word length by exactly +-1, the
direction is the sign of the s-block of the point (never exactly zero),
and an element of the next BFS level is produced by each of its
shortening generators exactly once.  Accepting a candidate only from
its minimal shortening generator therefore visits every element exactly
once with no deduplication structure at all.  Signs are read off a
float approximation of the exact integer coordinates; whenever an
approximation is too close to zero to be trusted the kernel bails out
and the graph is redone by a slower hash-table kernel that only relies
on signs it can trust.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .algebra import build_ring, PowerRing, TensorRing
from .errors import ResourceLimitError
from .graphs import DefiningGraph, INF

_OVERFLOW_LIMIT = 1 << 55

_PHI = (1.0 + math.sqrt(5.0)) / 2.0
_GEN_FLOAT = {"sqrt2": math.sqrt(2.0), "sqrt3": math.sqrt(3.0), "phi": _PHI}


def backend_name() -> str:
    forced = os.environ.get("ARTINACYL_KERNEL")
    if forced in ("numba", "numpy"):
        return forced
    if forced:
        raise ValueError(f"ARTINACYL_KERNEL must be 'numba' or 'numpy', got {forced!r}")
    return "numba" if _NUMBA_OK else "numpy"


def _basis_floats(ring) -> np.ndarray:
    if isinstance(ring, TensorRing):
        vals = np.empty(ring.dim)
        for mask in range(ring.dim):
            x = 1.0
            for p, name in enumerate(ring.gens):
                if mask >> p & 1:
                    x *= _GEN_FLOAT[name]
            vals[mask] = x
        return vals
    assert isinstance(ring, PowerRing)
    y = 2.0 * math.cos(math.pi / ring.N)
    return np.array([y**e for e in range(ring.dim)])


def build_arrays(g: DefiningGraph):
    """Pack the representation data into flat arrays for the kernels."""
    finite = {m for _, _, m in g.pairs() if m != INF}
    ring = build_ring(finite)
    n = len(g.vertices)
    D = ring.dim
    kinds = np.zeros((n, n), np.int8)
    scal = np.zeros((n, n), np.int64)
    sidx = np.zeros((n, n, D, 2), np.int64)
    sco = np.zeros((n, n, D, 2), np.int64)
    dense = np.zeros((n, n, D, D), np.int64)
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            m = g.label(g.vertices[s], g.vertices[t])
            mat = ring.value_matrix(m)
            dense[s, t] = mat
            cols = [[(i, mat[i][j]) for i in range(D) if mat[i][j]]
                    for j in range(D)]
            if all(not c for c in cols):
                kinds[s, t] = 0
            elif all(len(c) == 1 and c[0][0] == j and c[0][1] == cols[0][0][1]
                     for j, c in enumerate(cols)):
                kinds[s, t] = 1  # scalar multiple of the identity
                scal[s, t] = cols[0][0][1]
            elif all(len(c) <= 2 for c in cols):
                kinds[s, t] = 3
                for j, c in enumerate(cols):
                    for slot, (i, v) in enumerate(c):
                        sidx[s, t, j, slot] = i
                        sco[s, t, j, slot] = v
            else:
                kinds[s, t] = 2
    ident = np.tile(np.asarray(ring.one, np.int64), n)
    bval = _basis_floats(ring)
    return kinds, scal, sidx, sco, dense, ident, bval


def _count_mindescent_impl(kinds, scal, sidx, sco, dense, ident, bval, cap,
                           store):
    """Count ball elements accepting each only from its minimal descent.

    Returns (count, saturated, overflow, uncertain); when uncertain is
    True the result is unusable and the caller must fall back to the
    hash-table kernel.  `store` is a caller-provided (cap+1, n*D) int64
    scratch buffer (reused across calls to avoid page-fault churn).
    """
    n = kinds.shape[0]
    D = bval.shape[0]
    nd = n * D
    store[0] = ident
    scratch = np.empty(nd, np.int64)
    lvl_start = 0
    lvl_end = 1
    count = 1
    while True:
        for e in range(lvl_start, lvl_end):
            for s in range(n):
                v = 0.0
                a = 0.0
                for d in range(D):
                    x = store[e, s * D + d] * bval[d]
                    v += x
                    a += abs(x)
                if abs(v) <= 1e-9 * (a + 1.0):
                    return count, False, False, True
                if v < 0.0:
                    continue  # shortening move
                for i in range(nd):
                    scratch[i] = store[e, i]
                for t in range(n):
                    if t == s:
                        continue
                    kd = kinds[s, t]
                    if kd == 0:
                        continue
                    if kd == 1:
                        c = scal[s, t]
                        for d in range(D):
                            scratch[t * D + d] += c * store[e, s * D + d]
                    elif kd == 3:
                        for d in range(D):
                            x = store[e, s * D + d]
                            if x != 0:
                                c0 = sco[s, t, d, 0]
                                if c0 != 0:
                                    scratch[t * D + sidx[s, t, d, 0]] += c0 * x
                                c1 = sco[s, t, d, 1]
                                if c1 != 0:
                                    scratch[t * D + sidx[s, t, d, 1]] += c1 * x
                    else:
                        for i in range(D):
                            acc = 0
                            for d in range(D):
                                acc += dense[s, t, i, d] * store[e, s * D + d]
                            scratch[t * D + i] += acc
                for d in range(D):
                    scratch[s * D + d] = -store[e, s * D + d]
                # accept only if s is the minimal descent of the candidate
                reject = False
                for t in range(s):
                    v2 = 0.0
                    a2 = 0.0
                    for d in range(D):
                        x = scratch[t * D + d] * bval[d]
                        v2 += x
                        a2 += abs(x)
                    if abs(v2) <= 1e-9 * (a2 + 1.0):
                        return count, False, False, True
                    if v2 < 0.0:
                        reject = True
                        break
                if reject:
                    continue
                if count > cap - 1:
                    return cap, False, False, False
                ok = True
                for i in range(nd):
                    x = scratch[i]
                    store[count, i] = x
                    if x > _OVERFLOW_LIMIT or x < -_OVERFLOW_LIMIT:
                        ok = False
                count += 1
                if not ok:
                    return count, False, True, False
        if count == lvl_end:
            return count, True, False, False
        lvl_start = lvl_end
        lvl_end = count


def _count_ball_impl(kinds, scal, sidx, sco, dense, ident, bval, cap):
    n = kinds.shape[0]
    D = bval.shape[0]
    nd = n * D
    store = np.empty((cap + 1, nd), np.int64)
    store[0] = ident
    tsize = 16
    while tsize < 2 * (cap + 2):
        tsize <<= 1
    mask = tsize - 1
    t_prev = np.full(tsize, -1, np.int32)   # level L-1
    t_cur = np.full(tsize, -1, np.int32)    # level L
    t_next = np.full(tsize, -1, np.int32)   # level L+1 under construction
    # seed: identity in t_cur
    h = np.uint64(1469598103934665603)
    for i in range(nd):
        h = (h ^ np.uint64(store[0, i])) * np.uint64(1099511628211)
    t_cur[np.int64(h & np.uint64(mask))] = 0

    scratch = np.empty(nd, np.int64)
    lvl_start = 0
    lvl_end = 1
    count = 1
    while True:
        for e in range(lvl_start, lvl_end):
            for s in range(n):
                # direction of the move from the sign of the s-block
                v = 0.0
                a = 0.0
                for d in range(D):
                    x = store[e, s * D + d] * bval[d]
                    v += x
                    a += abs(x)
                certain = abs(v) > 1e-9 * (a + 1.0)
                if certain and v < 0.0:
                    continue  # shortening move: lands in a previous level
                # candidate coordinates
                for i in range(nd):
                    scratch[i] = store[e, i]
                for t in range(n):
                    if t == s:
                        continue
                    kd = kinds[s, t]
                    if kd == 0:
                        continue
                    if kd == 1:
                        c = scal[s, t]
                        for d in range(D):
                            scratch[t * D + d] += c * store[e, s * D + d]
                    elif kd == 3:
                        for d in range(D):
                            x = store[e, s * D + d]
                            if x != 0:
                                c0 = sco[s, t, d, 0]
                                if c0 != 0:
                                    scratch[t * D + sidx[s, t, d, 0]] += c0 * x
                                c1 = sco[s, t, d, 1]
                                if c1 != 0:
                                    scratch[t * D + sidx[s, t, d, 1]] += c1 * x
                    else:
                        for i in range(D):
                            acc = 0
                            for d in range(D):
                                acc += dense[s, t, i, d] * store[e, s * D + d]
                            scratch[t * D + i] += acc
                for d in range(D):
                    scratch[s * D + d] = -store[e, s * D + d]
                h = np.uint64(1469598103934665603)
                for i in range(nd):
                    h = (h ^ np.uint64(scratch[i])) * np.uint64(1099511628211)
                slot0 = np.int64(h & np.uint64(mask))
                if not certain:
                    # might be a shortening move: check the previous level
                    j = slot0
                    hit = False
                    while True:
                        idx = t_prev[j]
                        if idx < 0:
                            break
                        eq = True
                        for i in range(nd):
                            if store[idx, i] != scratch[i]:
                                eq = False
                                break
                        if eq:
                            hit = True
                            break
                        j = (j + 1) & mask
                    if hit:
                        continue
                # insert into the next level unless already there
                j = slot0
                dup = False
                while True:
                    idx = t_next[j]
                    if idx < 0:
                        break
                    eq = True
                    for i in range(nd):
                        if store[idx, i] != scratch[i]:
                            eq = False
                            break
                    if eq:
                        dup = True
                        break
                    j = (j + 1) & mask
                if dup:
                    continue
                if count > cap - 1:
                    # a (cap+1)-th element exists
                    return cap, False, False
                t_next[j] = np.int32(count)
                ok = True
                for i in range(nd):
                    x = scratch[i]
                    store[count, i] = x
                    if x > _OVERFLOW_LIMIT or x < -_OVERFLOW_LIMIT:
                        ok = False
                count += 1
                if not ok:
                    return count, False, True
        if count == lvl_end:
            return count, True, False  # next level empty: whole group seen
        lvl_start = lvl_end
        lvl_end = count
        t_prev, t_cur, t_next = t_cur, t_next, t_prev
        t_next[:] = -1


_NUMBA_OK = False
_count_ball_numba = None
_count_mindescent_numba = None
try:  # pragma: no cover - environment dependent
    if os.environ.get("ARTINACYL_KERNEL") != "numpy":
        from numba import njit

        _count_ball_numba = njit(cache=True, nogil=True)(_count_ball_impl)
        _count_mindescent_numba = njit(cache=True, nogil=True)(
            _count_mindescent_impl)
        _NUMBA_OK = True
except Exception:  # pragma: no cover
    _NUMBA_OK = False


def _count_ball_numpy(kinds, scal, sidx, sco, dense, ident, bval, cap):
    """Vectorized level-BFS fallback with global byte-level dedup."""
    n = kinds.shape[0]
    D = bval.shape[0]
    frontier = ident.reshape(1, -1)
    seen = {ident.tobytes()}
    count = 1
    while frontier.shape[0]:
        cands = []
        for s in range(n):
            ps = frontier[:, s * D:(s + 1) * D]
            new = frontier.copy()
            for t in range(n):
                if t == s or kinds[s, t] == 0:
                    continue
                new[:, t * D:(t + 1) * D] += ps @ dense[s, t].T
            new[:, s * D:(s + 1) * D] = -ps
            cands.append(new)
        allc = np.unique(np.vstack(cands), axis=0)
        if np.abs(allc).max() > _OVERFLOW_LIMIT:
            return count, False, True
        nxt = []
        for row in allc:
            key = row.tobytes()
            if key in seen:
                continue
            if count > cap - 1:
                return cap, False, False
            seen.add(key)
            nxt.append(row)
            count += 1
        frontier = np.array(nxt, np.int64).reshape(len(nxt), n * D)
    return count, True, False


_STORE_BUFFER = np.empty(0, np.int64)


def _store_view(rows: int, cols: int):
    global _STORE_BUFFER
    need = rows * cols
    if _STORE_BUFFER.size < need:
        _STORE_BUFFER = np.empty(need, np.int64)
    return _STORE_BUFFER[:need].reshape(rows, cols)


def count_ball(g: DefiningGraph, cap: int) -> tuple[int, bool]:
    """Number of distinct elements, capped: (min(|W|, cap), |W| <= cap)."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    args = build_arrays(g)
    if backend_name() == "numba":
        store = _store_view(cap + 1, len(args[5]))
        count, saturated, overflow, uncertain = _count_mindescent_numba(
            *args, cap, store)
        if uncertain:
            count, saturated, overflow = _count_ball_numba(*args, cap)
    else:
        count, saturated, overflow = _count_ball_numpy(*args, cap)
    if overflow:
        raise ResourceLimitError(
            "coordinate overflow during ball enumeration; lower the cap")
    return int(count), bool(saturated)
