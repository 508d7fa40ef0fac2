"""Pure-Python kernels.  Same contract as the compiled ``_kernels`` module.

Both kernels work with plain Python ints, so they never overflow; the
compiled versions use 64-bit counters and are only dispatched to when a
bound says the result fits.
"""

from __future__ import annotations

from itertools import product


def interlace_box(group: int, upper):
    """Value intervals for the row of SO(group - 1) under ``upper``.

    ``upper`` is a dominant weight of SO(group).  Returns ``(lo, hi)`` lists.
    """
    r = len(upper)
    lo, hi = [], []
    if group % 2:
        for j in range(r - 1):
            lo.append(upper[j + 1])
            hi.append(upper[j])
        if r:
            lo.append(-upper[r - 1])
            hi.append(upper[r - 1])
    else:
        for j in range(r - 2):
            lo.append(upper[j + 1])
            hi.append(upper[j])
        if r >= 2:
            lo.append(abs(upper[r - 1]))
            hi.append(upper[r - 2])
    return lo, hi


def _strides(sizes):
    strides = [1] * len(sizes)
    for j in range(len(sizes) - 2, -1, -1):
        strides[j] = strides[j + 1] * sizes[j + 1]
    return strides


def _prefix_sums(values, sizes, strides):
    total = len(values)
    for size, stride in zip(sizes, strides):
        if size == 1:
            continue
        for idx in range(total):
            if (idx // stride) % size:
                values[idx] += values[idx - stride]
    return values


def _box_sum(prefix, strides, a, b):
    d = len(a)
    total = 0
    for corner in range(1 << d):
        idx = 0
        neg = False
        for j in range(d):
            if corner >> j & 1:
                if a[j] == 0:
                    break
                idx += (a[j] - 1) * strides[j]
                neg = not neg
            else:
                idx += b[j] * strides[j]
        else:
            total += -prefix[idx] if neg else prefix[idx]
    return total


def count_chains(groups, los, his):
    """Count GT fillings row by row over a bounding grid.

    ``groups[t]`` is the group size of row ``t`` (top first); ``los[t]`` and
    ``his[t]`` bound the labels of that row.  The top row must be a single
    point.  Every cell of the bottom row counts as one completed chain, so
    callers pin the bottom row to zero.
    """
    nrows = len(groups)
    bottom_sizes = [h - l + 1 for l, h in zip(los[-1], his[-1])]
    if any(s <= 0 for s in bottom_sizes):
        return 0
    ncells = 1
    for s in bottom_sizes:
        ncells *= s
    values = [1] * ncells
    sizes = bottom_sizes
    strides = _strides(sizes)
    prefix = _prefix_sums(values, sizes, strides)

    for t in range(nrows - 2, -1, -1):
        lo_t, hi_t = los[t], his[t]
        row_sizes = [h - l + 1 for l, h in zip(lo_t, hi_t)]
        if any(s <= 0 for s in row_sizes):
            return 0
        lo_next = los[t + 1]
        out = []
        for x in product(*(range(l, h + 1) for l, h in zip(lo_t, hi_t))):
            blo, bhi = interlace_box(groups[t], x)
            a, b = [], []
            for j in range(len(blo)):
                aj = max(blo[j], lo_next[j]) - lo_next[j]
                bj = min(bhi[j], lo_next[j] + sizes[j] - 1) - lo_next[j]
                if aj > bj:
                    break
                a.append(aj)
                b.append(bj)
            else:
                out.append(_box_sum(prefix, strides, a, b))
                continue
            out.append(0)
        if t == 0:
            return out[0]
        sizes = row_sizes
        strides = _strides(sizes)
        prefix = _prefix_sums(out, sizes, strides)
    return prefix[0]


def count_nilp(starts, ends):
    """Count tuples of vertex-disjoint north/east paths ``starts[i] -> ends[i]``."""
    starts = [tuple(p) for p in starts]
    ends = [tuple(p) for p in ends]
    npaths = len(starts)
    if npaths == 0:
        return 1
    occupied = set()

    def walk(i, x, y):
        bx, by = ends[i]
        if x == bx and y == by:
            if i + 1 == npaths:
                return 1
            nxt = starts[i + 1]
            if nxt in occupied:
                return 0
            occupied.add(nxt)
            res = walk(i + 1, nxt[0], nxt[1])
            occupied.discard(nxt)
            return res
        res = 0
        if x < bx and (x + 1, y) not in occupied:
            occupied.add((x + 1, y))
            res += walk(i, x + 1, y)
            occupied.discard((x + 1, y))
        if y < by and (x, y + 1) not in occupied:
            occupied.add((x, y + 1))
            res += walk(i, x, y + 1)
            occupied.discard((x, y + 1))
        return res

    first = starts[0]
    occupied.add(first)
    return walk(0, first[0], first[1])
