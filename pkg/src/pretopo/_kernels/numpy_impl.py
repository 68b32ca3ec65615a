"""Vectorized numpy kernels; signature-identical fallback for the JIT path.

Bit matrices are unpacked to boolean (n, n) arrays where that vectorizes
better than word-level loops; results are bit-exact with the JIT path.
"""

import numpy as np

U1 = np.uint64(1)


def _shifts(n):
    return np.arange(n, dtype=np.uint64)


def _unpack(rows):
    n = rows.shape[0]
    return ((rows[:, None] >> _shifts(n)[None, :]) & U1).astype(bool)


def _pack(bits):
    n = bits.shape[-1]
    if n == 0:
        return np.zeros(bits.shape[:-1], np.uint64)
    return np.bitwise_or.reduce(bits.astype(np.uint64) << _shifts(n), axis=-1)


def reverse_rows(rows):
    return _pack(_unpack(rows).T)


def transitive_closure(rows):
    n = rows.shape[0]
    m = _unpack(rows)
    length = 1
    while length < n:
        m = m | ((m.astype(np.uint8) @ m.astype(np.uint8)) > 0)
        length *= 2
    return _pack(m)


def or_table(rows):
    n = rows.shape[0]
    table = np.zeros(1 << n, np.uint64)
    masks = np.arange(1 << n, dtype=np.uint64)
    for j in range(n):
        member = ((masks >> np.uint64(j)) & U1).astype(bool)
        table[member] |= rows[j]
    return table


def conn_table(und_rows):
    n = und_rows.shape[0]
    masks = np.arange(1 << n, dtype=np.uint64)
    cur = masks & (~masks + U1)
    for _ in range(n):
        acc = np.zeros(1 << n, np.uint64)
        for j in range(n):
            member = ((cur >> np.uint64(j)) & U1).astype(bool)
            acc[member] |= und_rows[j]
        cur = cur | (acc & masks)
    return cur == masks


def is_weakly_connected(und_rows):
    n = und_rows.shape[0]
    if n == 0:
        return True
    full = (1 << n) - 1
    rows = [int(r) for r in und_rows]
    cur = 1
    while True:
        nxt = cur
        for j in range(n):
            if cur >> j & 1:
                nxt |= rows[j]
        if nxt == cur:
            return cur == full
        cur = nxt


def _membership(n):
    masks = np.arange(1 << n, dtype=np.uint64)
    member = ((masks[:, None] >> _shifts(n)[None, :]) & U1).astype(bool)
    return masks, member


def _relax(table, rows_per_mask, n):
    """Fixed-point of table[m, a] |= rows_per_mask[m, j] for j in table[m, a]."""
    for _ in range(max(n, 1)):
        for j in range(n):
            has = ((table >> np.uint64(j)) & U1).astype(np.uint64)
            table = table | has * rows_per_mask[:, j][:, None]
    return table


def tsub_table(rows, tc_rows):
    n = rows.shape[0]
    masks, member = _membership(n)
    induced = np.where(member, rows[None, :] & masks[:, None], np.uint64(0))
    closed = _relax(induced.copy(), induced, n)
    restricted = tc_rows[None, :] & masks[:, None]
    return (~member | (closed == restricted)).all(axis=1)


def pathchar_table(rows, tc_rows):
    n = rows.shape[0]
    masks, member = _membership(n)
    induced = np.where(member, rows[None, :] & masks[:, None], np.uint64(0))
    reach = np.where(member, np.uint64(1) << _shifts(n)[None, :], np.uint64(0))
    reach = _relax(reach, induced, n)
    required = tc_rows[None, :] & masks[:, None]
    return (~member | (required & ~reach == 0)).all(axis=1)


def r_commute_table(rows):
    n = rows.shape[0]
    bits = _unpack(rows)
    sym_bits = bits | bits.T
    _, member = _membership(n)
    pair = member[:, :, None] & member[:, None, :]
    induced = bits[None, :, :] & pair
    symmetrized = induced | induced.transpose(0, 2, 1)
    expected = sym_bits[None, :, :] & pair
    return (symmetrized == expected).reshape(1 << n, -1).all(axis=1)


def defect_steps(rows, tc_rows):
    n = rows.shape[0]
    cur = np.uint64(1) << _shifts(n)
    steps = np.zeros(n, np.int64)
    done = cur == tc_rows
    for k in range(1, n + 1):
        if done.all():
            break
        acc = np.zeros(n, np.uint64)
        for j in range(n):
            has = ((cur >> np.uint64(j)) & U1).astype(bool)
            acc[has] |= rows[j]
        cur = acc
        newly = ~done & (cur == tc_rows)
        steps[newly] = k
        done |= newly
    return steps


def product_rows(rows1, rows2):
    b1 = _unpack(rows1).astype(np.uint8)
    b2 = _unpack(rows2).astype(np.uint8)
    return _pack(np.kron(b1, b2) > 0)
