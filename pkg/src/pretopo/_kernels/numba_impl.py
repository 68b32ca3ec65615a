"""JIT-compiled kernels over uint64 adjacency rows.

Row ``x`` is the out-neighborhood bitmask of point ``x`` (loop set).
All loops are written uint64-safe so bit 63 is usable.  Table kernels
allocate 2^n entries and are meant for the verification campaigns
(n <= 10 or so), not for the 64-point library ceiling.
"""

import numpy as np
from numba import njit

ONE = np.uint64(1)
ZERO = np.uint64(0)


@njit(cache=True)
def reverse_rows(rows):
    n = rows.shape[0]
    out = np.zeros(n, np.uint64)
    for x in range(n):
        for y in range(n):
            if (rows[x] >> np.uint64(y)) & ONE:
                out[y] |= ONE << np.uint64(x)
    return out


@njit(cache=True)
def transitive_closure(rows):
    n = rows.shape[0]
    out = rows.copy()
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = out[x]
            for y in range(n):
                if (acc >> np.uint64(y)) & ONE:
                    acc |= out[y]
            if acc != out[x]:
                out[x] = acc
                changed = True
    return out


@njit(cache=True)
def or_table(rows):
    n = rows.shape[0]
    table = np.zeros(1 << n, np.uint64)
    for mi in range(1, 1 << n):
        low = mi & -mi
        j = 0
        v = low
        while v > 1:
            v >>= 1
            j += 1
        table[mi] = table[mi ^ low] | rows[j]
    return table


@njit(cache=True)
def conn_table(und_rows):
    n = und_rows.shape[0]
    out = np.zeros(1 << n, np.bool_)
    out[0] = True
    for mi in range(1, 1 << n):
        m = np.uint64(mi)
        cur = m & (~m + ONE)
        for _ in range(n):
            nxt = cur
            for j in range(n):
                if (cur >> np.uint64(j)) & ONE:
                    nxt |= und_rows[j] & m
            if nxt == cur:
                break
            cur = nxt
        out[mi] = cur == m
    return out


@njit(cache=True)
def is_weakly_connected(und_rows):
    n = und_rows.shape[0]
    if n == 0:
        return True
    full = np.uint64(0xFFFFFFFFFFFFFFFF) >> np.uint64(64 - n)
    cur = ONE
    for _ in range(n):
        nxt = cur
        for j in range(n):
            if (cur >> np.uint64(j)) & ONE:
                nxt |= und_rows[j]
        if nxt == cur:
            break
        cur = nxt
    return cur == full


@njit(cache=True)
def tsub_table(rows, tc_rows):
    n = rows.shape[0]
    out = np.ones(1 << n, np.bool_)
    ind = np.zeros(n, np.uint64)
    for mi in range(1 << n):
        m = np.uint64(mi)
        for j in range(n):
            if (m >> np.uint64(j)) & ONE:
                ind[j] = rows[j] & m
            else:
                ind[j] = ZERO
        changed = True
        while changed:
            changed = False
            for x in range(n):
                if not (m >> np.uint64(x)) & ONE:
                    continue
                acc = ind[x]
                for y in range(n):
                    if (acc >> np.uint64(y)) & ONE:
                        acc |= ind[y]
                if acc != ind[x]:
                    ind[x] = acc
                    changed = True
        ok = True
        for x in range(n):
            if (m >> np.uint64(x)) & ONE and ind[x] != tc_rows[x] & m:
                ok = False
                break
        out[mi] = ok
    return out


@njit(cache=True)
def pathchar_table(rows, tc_rows):
    n = rows.shape[0]
    out = np.ones(1 << n, np.bool_)
    for mi in range(1 << n):
        m = np.uint64(mi)
        ok = True
        for a in range(n):
            if not (m >> np.uint64(a)) & ONE:
                continue
            reach = ONE << np.uint64(a)
            for _ in range(n):
                nxt = reach
                for j in range(n):
                    if (reach >> np.uint64(j)) & ONE:
                        nxt |= rows[j] & m
                if nxt == reach:
                    break
                reach = nxt
            if (tc_rows[a] & m) & ~reach:
                ok = False
                break
        out[mi] = ok
    return out


@njit(cache=True)
def r_commute_table(rows):
    n = rows.shape[0]
    rev = reverse_rows(rows)
    sym = rows | rev
    out = np.ones(1 << n, np.bool_)
    ind = np.zeros(n, np.uint64)
    for mi in range(1 << n):
        m = np.uint64(mi)
        for j in range(n):
            if (m >> np.uint64(j)) & ONE:
                ind[j] = rows[j] & m
            else:
                ind[j] = ZERO
        ok = True
        for x in range(n):
            if not (m >> np.uint64(x)) & ONE:
                continue
            symmetrized = ind[x]
            for y in range(n):
                if (ind[y] >> np.uint64(x)) & ONE:
                    symmetrized |= ONE << np.uint64(y)
            if symmetrized != sym[x] & m:
                ok = False
                break
        out[mi] = ok
    return out


@njit(cache=True)
def defect_steps(rows, tc_rows):
    n = rows.shape[0]
    steps = np.zeros(n, np.int64)
    for x in range(n):
        cur = ONE << np.uint64(x)
        k = 0
        while cur != tc_rows[x]:
            nxt = ZERO
            for j in range(n):
                if (cur >> np.uint64(j)) & ONE:
                    nxt |= rows[j]
            cur = nxt
            k += 1
        steps[x] = k
    return steps


@njit(cache=True)
def product_rows(rows1, rows2):
    n1 = rows1.shape[0]
    n2 = rows2.shape[0]
    out = np.zeros(n1 * n2, np.uint64)
    for x in range(n1):
        for y in range(n2):
            row = ZERO
            for x2 in range(n1):
                if (rows1[x] >> np.uint64(x2)) & ONE:
                    row |= rows2[y] << np.uint64(x2 * n2)
            out[x * n2 + y] = row
    return out
