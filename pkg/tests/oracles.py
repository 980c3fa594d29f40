"""Independent brute-force oracles used to check the analysis and smoothing
implementations. Deliberately naive and kept free of any code under test:
counting is done by full rescans per candidate key, and the local fits are
solved with full-pivot Gaussian elimination on numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

from lexsent.lexicon import CATEGORY_ORDER


def brute_word_counts(tokens, entries):
    """entries: dict word -> set of category values (plain strings)."""
    words = sorted({w for _, w in tokens})
    rows = []
    for word in words:
        for cat in sorted(entries.get(word, ())):
            n = 0
            for _, w in tokens:
                if w == word:
                    n += 1
            if n:
                rows.append((word, cat, n))
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))
    return rows


def brute_distribution(tokens, entries):
    rows = []
    for cat in [c.value for c in CATEGORY_ORDER]:
        total = 0
        for _, w in tokens:
            if cat in entries.get(w, ()):
                total += 1
        rows.append((cat, total))
    return rows


def brute_line_counts(tokens, entries):
    lines = sorted({line for line, _ in tokens})
    cats = sorted({c for cs in entries.values() for c in cs})
    rows = []
    for line in lines:
        for cat in cats:
            n = 0
            for tl, w in tokens:
                if tl == line and cat in entries.get(w, ()):
                    n += 1
            if n:
                rows.append((line, cat, n))
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))
    return rows


def brute_line_scores(tokens, polarity_of):
    """polarity_of: dict word -> 'positive' | 'negative'."""
    rows = []
    for line in sorted({line for line, _ in tokens}):
        matched = False
        score = 0
        for tl, w in tokens:
            if tl != line or w not in polarity_of:
                continue
            matched = True
            score += 1 if polarity_of[w] == "positive" else -1
        if matched:
            rows.append((line, score))
    return rows


def solve_full_pivot(a, b):
    """Gaussian elimination with full pivoting (row and column exchanges)."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    p = len(b)
    col_of = list(range(p))
    for k in range(p):
        sub = np.abs(a[k:, k:])
        r, c = np.unravel_index(int(np.argmax(sub)), sub.shape)
        r += k
        c += k
        if a[r, c] == 0.0:
            raise ZeroDivisionError("singular system")
        a[[k, r], :] = a[[r, k], :]
        b[k], b[r] = b[r], b[k]
        a[:, [k, c]] = a[:, [c, k]]
        col_of[k], col_of[c] = col_of[c], col_of[k]
        for i in range(k + 1, p):
            f = a[i, k] / a[k, k]
            a[i, k:] -= f * a[k, k:]
            b[i] -= f * b[k]
    z = np.zeros(p)
    for k in range(p - 1, -1, -1):
        z[k] = (b[k] - a[k, k + 1:] @ z[k + 1:]) / a[k, k]
    x = np.zeros(p)
    for k in range(p):
        x[col_of[k]] = z[k]
    return x


def loess_oracle(points, span, degree, grid_points):
    """Explicit weighted normal equations at every grid point.

    Neighborhoods are the q nearest points with distance ties resolved
    toward smaller x; among duplicates of one x value the point adjacent
    to the already-selected window comes first (the contiguous-window
    convention).
    """
    pts = sorted(points, key=lambda p: p[0])
    xs = np.array([p[0] for p in pts], dtype=float)
    ys = np.array([p[1] for p in pts], dtype=float)
    n = len(xs)
    q = min(max(math.ceil(span * n), degree + 2), n)
    x_min, x_max = float(xs[0]), float(xs[-1])
    grid = [x_min + (x_max - x_min) * (j / (grid_points - 1)) for j in range(grid_points)]
    grid[-1] = x_max

    out = []
    for x0 in grid:
        pos = int(np.searchsorted(xs, x0, side="left"))
        keyed = []
        for i in range(n):
            d = abs(xs[i] - x0)
            if i < pos:
                keyed.append((d, 0, -i, i))
            else:
                keyed.append((d, 1, i, i))
        keyed.sort()
        idx = sorted(k[3] for k in keyed[:q])
        d = np.abs(xs[idx] - x0)
        dmax = float(d.max())
        if dmax == 0.0:
            w = np.ones(q)
        else:
            u = d / dmax
            w = np.where(u < 1.0, (1.0 - u ** 3) ** 3, 0.0)
        t = xs[idx] - x0
        design = np.vander(t, degree + 1, increasing=True)
        a = design.T @ (w[:, None] * design)
        rhs = design.T @ (w * ys[idx])
        beta = solve_full_pivot(a, rhs)
        out.append((x0, float(beta[0])))
    return out
