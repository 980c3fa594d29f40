# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled local regression kernel.

Twin of ``_loess_py``; the operation order must match it exactly so the
two backends produce bit-identical curves. Edit the two files together.
"""

from libc.math cimport fabs

from .errors import DegenerateNeighborhoodError

cdef double _SINGULAR_REL_TOL = 1e-13
cdef double _RIDGE_SCALE = 1e-12


cdef int _solve_first(double a[3][3], double rhs[3], int p, double *beta0) noexcept:
    # Gaussian elimination with partial pivoting; 1 on success, 0 if singular.
    cdef double amax = 0.0, v, pval, f, acc, tmp
    cdef int r, c, col, piv
    cdef double beta[3]
    for r in range(p):
        for c in range(p):
            v = fabs(a[r][c])
            if v > amax:
                amax = v
    cdef double tol = amax * _SINGULAR_REL_TOL
    for col in range(p):
        piv = col
        pval = fabs(a[col][col])
        for r in range(col + 1, p):
            v = fabs(a[r][col])
            if v > pval:
                pval = v
                piv = r
        if pval <= tol:
            return 0
        if piv != col:
            for c in range(p):
                tmp = a[col][c]
                a[col][c] = a[piv][c]
                a[piv][c] = tmp
            tmp = rhs[col]
            rhs[col] = rhs[piv]
            rhs[piv] = tmp
        for r in range(col + 1, p):
            f = a[r][col] / a[col][col]
            for c in range(col + 1, p):
                a[r][c] -= f * a[col][c]
            rhs[r] -= f * rhs[col]
            a[r][col] = 0.0
    for col in range(p - 1, -1, -1):
        acc = rhs[col]
        for c in range(col + 1, p):
            acc -= a[col][c] * beta[c]
        beta[col] = acc / a[col][col]
    beta0[0] = beta[0]
    return 1


def fit_grid(double[::1] xs, double[::1] ys, double[::1] grid, int degree, Py_ssize_t q):
    """Evaluate the local polynomial fit at every grid point.

    xs must be sorted ascending; q is the neighborhood size, already
    clamped by the caller to degree + 2 <= q <= len(xs).
    """
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t m = grid.shape[0]
    cdef int p = degree + 1
    cdef Py_ssize_t j, lo, hi, mid, i, k
    cdef double x0, dl, dr, dmax, dtail, t, u, v, w, y, wt, wtt, wttt
    cdef double s0, s1, s2, s3, s4, b0, b1, b2, trace, lam, beta0
    cdef double a[3][3]
    cdef double rhs[3]
    out = []
    for j in range(m):
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
        for k in range(q):
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
            a[0][0] = s0; a[0][1] = s1
            a[1][0] = s1; a[1][1] = s2
            rhs[0] = b0; rhs[1] = b1
            trace = s0 + s2
        else:
            a[0][0] = s0; a[0][1] = s1; a[0][2] = s2
            a[1][0] = s1; a[1][1] = s2; a[1][2] = s3
            a[2][0] = s2; a[2][1] = s3; a[2][2] = s4
            rhs[0] = b0; rhs[1] = b1; rhs[2] = b2
            trace = s0 + s2 + s4

        if not _solve_first(a, rhs, p, &beta0):
            lam = _RIDGE_SCALE * trace
            if degree == 1:
                a[0][0] = s0 + lam; a[0][1] = s1
                a[1][0] = s1; a[1][1] = s2 + lam
                rhs[0] = b0; rhs[1] = b1
            else:
                a[0][0] = s0 + lam; a[0][1] = s1; a[0][2] = s2
                a[1][0] = s1; a[1][1] = s2 + lam; a[1][2] = s3
                a[2][0] = s2; a[2][1] = s3; a[2][2] = s4 + lam
                rhs[0] = b0; rhs[1] = b1; rhs[2] = b2
            if not _solve_first(a, rhs, p, &beta0):
                raise DegenerateNeighborhoodError(
                    f"local system at grid x={x0!r} is singular even after ridge regularization"
                )
        out.append(beta0)
    return out
