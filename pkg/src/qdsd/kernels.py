"""Hot loops of the brute-force enumerator.

Vectors are rows of an ``int64`` array with entries in ``[0, p)``. ``inv``
is the table of multiplicative inverses mod ``p`` (``inv[0]`` unused).
"""

import numpy as np

from ._jit import njit


def inverse_table(p):
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


@njit(cache=True, nogil=True)
def rref_mod_p(mat, p, inv):
    """Reduced row echelon form of ``mat`` over GF(p).

    Returns ``(rref, rank)``; the first ``rank`` rows of ``rref`` are the
    canonical basis, the rest are zero.
    """
    a = mat.copy() % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot = -1
        for r in range(rank, rows):
            if a[r, c] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for j in range(cols):
                t = a[rank, j]
                a[rank, j] = a[pivot, j]
                a[pivot, j] = t
        s = inv[a[rank, c]]
        for j in range(cols):
            a[rank, j] = (a[rank, j] * s) % p
        for r in range(rows):
            if r != rank and a[r, c] != 0:
                f = a[r, c]
                for j in range(cols):
                    a[r, j] = (a[r, j] - f * a[rank, j]) % p
        rank += 1
    return a, rank


@njit(cache=True, nogil=True)
def rank_mod_p(mat, p, inv):
    return rref_mod_p(mat, p, inv)[1]


@njit(cache=True, nogil=True)
def _extend(src, src_piv, r, block, d, p, inv, dst, dst_piv):
    # dst <- span(src rows, block rows) kept fully reduced; False if dependent
    n = src.shape[1]
    for i in range(r):
        dst_piv[i] = src_piv[i]
        for j in range(n):
            dst[i, j] = src[i, j]
    cur = r
    v = np.empty(n, dtype=np.int64)
    for b in range(d):
        for j in range(n):
            v[j] = block[b, j]
        for i in range(cur):
            f = v[dst_piv[i]]
            if f != 0:
                for j in range(n):
                    v[j] = (v[j] - f * dst[i, j]) % p
        lead = -1
        for j in range(n):
            if v[j] != 0:
                lead = j
                break
        if lead < 0:
            return False
        s = inv[v[lead]]
        for j in range(n):
            v[j] = (v[j] * s) % p
        for i in range(cur):
            g = dst[i, lead]
            if g != 0:
                for j in range(n):
                    dst[i, j] = (dst[i, j] - g * v[j]) % p
        for j in range(n):
            dst[cur, j] = v[j]
        dst_piv[cur] = lead
        cur += 1
    return True


@njit(cache=True, nogil=True)
def dsd_search(bases, dims, n, p, inv, m_target, accept, need_accept, first_lo, first_hi, out, fill):
    """Depth-first search for DSDs as strictly increasing block indices.

    ``bases[i, :dims[i]]`` is the RREF basis of candidate block ``i``;
    candidates are sorted by dimension, so an increasing index sequence is
    the canonical block order and each DSD is visited once. Only DSDs whose
    first block index lies in ``[first_lo, first_hi)`` are searched.
    ``m_target < 0`` means any block count. With ``need_accept`` a DSD is
    kept only if some block has ``accept[i]``. When ``fill`` is set the
    block indices of kept DSDs go into the rows of ``out`` (padded with -1).
    Returns the number of kept DSDs.
    """
    n_cand = dims.shape[0]
    ech = np.zeros((n + 1, n, n), dtype=np.int64)
    piv = np.zeros((n + 1, n), dtype=np.int64)
    rank = np.zeros(n + 1, dtype=np.int64)
    chosen = np.full(n + 1, -1, dtype=np.int64)
    hit = np.zeros(n + 1, dtype=np.bool_)
    count = 0
    depth = 0
    chosen[0] = first_lo - 1
    while depth >= 0:
        idx = chosen[depth] + 1
        stop = first_hi if depth == 0 else n_cand
        r = rank[depth]
        remaining = n - r
        descended = False
        while idx < stop:
            d = dims[idx]
            if d > remaining:
                break
            rest = remaining - d
            used = depth + 1
            if rest > 0 and rest < d:
                idx += 1
                continue
            if m_target >= 0:
                if rest == 0 and used != m_target:
                    idx += 1
                    continue
                if rest > 0 and (used >= m_target or rest // d < m_target - used):
                    idx += 1
                    continue
            if _extend(ech[depth], piv[depth], r, bases[idx], d, p, inv, ech[depth + 1], piv[depth + 1]):
                chosen[depth] = idx
                hit[depth + 1] = hit[depth] or accept[idx]
                if rest == 0:
                    if hit[depth + 1] or not need_accept:
                        if fill:
                            for j in range(n):
                                out[count, j] = chosen[j] if j <= depth else -1
                        count += 1
                else:
                    rank[depth + 1] = r + d
                    chosen[depth + 1] = idx
                    depth += 1
                    descended = True
                    break
            idx += 1
        if not descended:
            depth -= 1
    return count
