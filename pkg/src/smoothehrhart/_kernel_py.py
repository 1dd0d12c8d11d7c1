"""Pure-Python counting kernel with arbitrary-precision integers.

Same algorithm and signature as the compiled ``_kernel.count_range``.
"""

from __future__ import annotations


def count_range(A, rhs, lo, hi, tailmin, first_lo, first_hi, budget):
    A = [[int(x) for x in row] for row in A]
    m = len(A)
    n = len(A[0]) if m else len(lo)
    lo = [int(x) for x in lo]
    hi = [int(x) for x in hi]
    # per level: (coefficient, row, tail minimum) for every row
    levels = [[(A[r][j], r, int(tailmin[r][j])) for r in range(m)] for j in range(n)]
    cols = [[A[r][j] for r in range(m)] for j in range(n)]
    nodes = 0
    total = 0

    # explicit stack of (level, current value, top value, slack list)
    slack = [int(x) for x in rhs]
    stack = []
    j = 0
    while True:
        nodes += 1
        if nodes > budget:
            return None, nodes
        l, h = lo[j], hi[j]
        if j == 0:
            l = max(l, first_lo)
            h = min(h, first_hi)
        for a, r, tm in levels[j]:
            c = slack[r] - tm
            if a > 0:
                q = c // a
                if q < h:
                    h = q
            elif a < 0:
                q = -(c // -a)
                if q > l:
                    l = q
            elif c < 0:
                h = l - 1
            if h < l:
                break
        if j == n - 1 or h < l:
            if j == n - 1 and h >= l:
                total += h - l + 1
            # backtrack to the next sibling
            while stack:
                pj, x, top, pslack = stack[-1]
                if x < top:
                    x += 1
                    stack[-1] = (pj, x, top, pslack)
                    col = cols[pj]
                    slack = [s - c * x for s, c in zip(pslack, col)]
                    j = pj + 1
                    break
                stack.pop()
            else:
                return total, nodes
            continue
        stack.append((j, l, h, slack))
        col = cols[j]
        slack = [s - c * l for s, c in zip(slack, col)]
        j += 1
