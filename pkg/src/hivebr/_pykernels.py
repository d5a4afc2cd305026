"""Pure-Python hot kernels. ``_ckernels.pyx`` mirrors these signatures exactly."""


def row_insert(word):
    """Schensted row insertion of ``word`` (left to right); returns the rows as lists."""
    rows = []
    for x in word:
        for row in rows:
            # leftmost entry strictly greater than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(row):
                row.append(x)
                break
            row[lo], x = x, row[lo]
        else:
            rows.append([x])
    return rows


def fill_hives(values, order, cons_ptr, cons, count_only):
    """Depth-first integer fill of the cells ``order`` of a hive.

    ``values`` holds every vertex label, with the boundary already set.
    Cell ``order[k]`` is bounded by constraints ``cons[7*t : 7*t+7]`` for
    ``cons_ptr[k] <= t < cons_ptr[k+1]``; a constraint
    ``(sx, i1, s1, i2, s2, i3, s3)`` reads
    ``sx*x + s1*v[i1] + s2*v[i2] + s3*v[i3] >= 0``, where the three other
    vertices are boundary cells or earlier in ``order``.

    Returns the number of fillings when ``count_only``, else the list of
    completed ``values`` tuples in lexicographic order of the fill.
    """
    v = list(values)
    K = len(order)
    found = []
    count = 0
    if K == 0:
        return 1 if count_only else [tuple(v)]

    def bounds(k):
        lo = hi = None
        for t in range(cons_ptr[k], cons_ptr[k + 1]):
            b = 7 * t
            rest = cons[b + 2] * v[cons[b + 1]] + cons[b + 4] * v[cons[b + 3]] \
                + cons[b + 6] * v[cons[b + 5]]
            if cons[b] > 0:
                if lo is None or -rest > lo:
                    lo = -rest
            elif hi is None or rest < hi:
                hi = rest
        if lo is None or hi is None:
            raise RuntimeError(f"cell {order[k]} is not bounded on both sides")
        return lo, hi

    his = [0] * K
    level = 0
    lo, his[0] = bounds(0)
    v[order[0]] = lo
    while True:
        cell = order[level]
        if v[cell] > his[level]:
            level -= 1
            if level < 0:
                break
            v[order[level]] += 1
            continue
        if level == K - 1:
            if count_only:
                count += his[level] - v[cell] + 1
                v[cell] = his[level] + 1
            else:
                found.append(tuple(v))
                v[cell] += 1
            continue
        level += 1
        lo, his[level] = bounds(level)
        v[order[level]] = lo
    return count if count_only else found
