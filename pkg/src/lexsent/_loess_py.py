"""Pure-Python local regression kernel.

Fallback twin of ``_loess_cy``. The arithmetic here must stay in the exact
same operation order as the compiled kernel so both produce bit-identical
curves; edit the two files together.
"""

from __future__ import annotations

from math import fabs

from .errors import DegenerateNeighborhoodError

_SINGULAR_REL_TOL = 1e-13
_RIDGE_SCALE = 1e-12


def _solve_first(a, rhs, p):
    """Gaussian elimination with partial pivoting; returns beta[0] or None."""
    amax = 0.0
    for r in range(p):
        for c in range(p):
            v = fabs(a[r][c])
            if v > amax:
                amax = v
    tol = amax * _SINGULAR_REL_TOL
    for col in range(p):
        piv = col
        pval = fabs(a[col][col])
        for r in range(col + 1, p):
            v = fabs(a[r][col])
            if v > pval:
                pval = v
                piv = r
        if pval <= tol:
            return None
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
        for r in range(col + 1, p):
            f = a[r][col] / a[col][col]
            for c in range(col + 1, p):
                a[r][c] -= f * a[col][c]
            rhs[r] -= f * rhs[col]
            a[r][col] = 0.0
    beta = [0.0] * p
    for col in range(p - 1, -1, -1):
        acc = rhs[col]
        for c in range(col + 1, p):
            acc -= a[col][c] * beta[c]
        beta[col] = acc / a[col][col]
    return beta[0]


def fit_grid(xs, ys, grid, degree, q):
    """Evaluate the local polynomial fit at every grid point.

    xs must be sorted ascending; q is the neighborhood size, already
    clamped by the caller to degree + 2 <= q <= len(xs).
    """
    n = len(xs)
    p = degree + 1
    out = []
    for j in range(len(grid)):
        x0 = grid[j]

        # leftmost insertion point, then grow the window q times taking
        # the nearer side (ties go left: smaller x first)
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) // 2
            if xs[mid] < x0:
                lo = mid + 1
            else:
                hi = mid
        hi = lo
        for _ in range(q):
            if lo > 0 and hi < n:
                dl = x0 - xs[lo - 1]
                dr = xs[hi] - x0
                if dl <= dr:
                    lo -= 1
                else:
                    hi += 1
            elif lo > 0:
                lo -= 1
            else:
                hi += 1

        dmax = fabs(x0 - xs[lo])
        dtail = fabs(xs[hi - 1] - x0)
        if dtail > dmax:
            dmax = dtail

        s0 = s1 = s2 = s3 = s4 = 0.0
        b0 = b1 = b2 = 0.0
        for i in range(lo, hi):
            t = xs[i] - x0
            if dmax == 0.0:
                w = 1.0
            else:
                u = fabs(t) / dmax
                if u < 1.0:
                    v = 1.0 - u * u * u
                    w = v * v * v
                else:
                    w = 0.0
            y = ys[i]
            wt = w * t
            wtt = wt * t
            s0 += w
            s1 += wt
            s2 += wtt
            b0 += w * y
            b1 += wt * y
            if degree == 2:
                wttt = wtt * t
                s3 += wttt
                s4 += wttt * t
                b2 += wtt * y

        if degree == 1:
            a = [[s0, s1], [s1, s2]]
            rhs = [b0, b1]
            trace = s0 + s2
        else:
            a = [[s0, s1, s2], [s1, s2, s3], [s2, s3, s4]]
            rhs = [b0, b1, b2]
            trace = s0 + s2 + s4

        beta0 = _solve_first(a, rhs, p)
        if beta0 is None:
            lam = _RIDGE_SCALE * trace
            if degree == 1:
                a = [[s0 + lam, s1], [s1, s2 + lam]]
                rhs = [b0, b1]
            else:
                a = [[s0 + lam, s1, s2], [s1, s2 + lam, s3], [s2, s3, s4 + lam]]
                rhs = [b0, b1, b2]
            beta0 = _solve_first(a, rhs, p)
            if beta0 is None:
                raise DegenerateNeighborhoodError(
                    f"local system at grid x={x0!r} is singular even after ridge regularization"
                )
        out.append(beta0)
    return out
