"""Exact integer matrix normal forms: row Hermite form, Smith form, solvers.

Matrices are lists of lists of Python ints, so entries may grow past
machine words without overflow.  Everything here is deterministic.
"""

from __future__ import annotations

from .errors import DomainError


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def row_hermite(matrix, want_transform=False):
    """Row Hermite normal form.

    Returns ``(h, pivots)`` or ``(h, pivots, u)`` with ``u * matrix == h``,
    u unimodular.  h keeps the full row count; nonzero rows come first with
    positive pivots in strictly increasing columns, and entries above each
    pivot are reduced into [0, pivot).
    """
    h = [list(row) for row in matrix]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows) if want_transform else None
    top = 0
    pivots = []
    for col in range(cols):
        # find a pivot row at or below `top`
        pivot = None
        for i in range(top, rows):
            if h[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != top:
            h[top], h[pivot] = h[pivot], h[top]
            if u is not None:
                u[top], u[pivot] = u[pivot], u[top]
        # clear below with gcd steps
        for i in range(top + 1, rows):
            while h[i][col]:
                q = h[top][col] // h[i][col]
                for j in range(cols):
                    h[top][j] -= q * h[i][j]
                if u is not None:
                    for j in range(rows):
                        u[top][j] -= q * u[i][j]
                h[top], h[i] = h[i], h[top]
                if u is not None:
                    u[top], u[i] = u[i], u[top]
        if h[top][col] < 0:
            h[top] = [-x for x in h[top]]
            if u is not None:
                u[top] = [-x for x in u[top]]
        # reduce entries above the pivot
        for i in range(top):
            q = h[i][col] // h[top][col]
            if q:
                for j in range(cols):
                    h[i][j] -= q * h[top][j]
                if u is not None:
                    for j in range(rows):
                        u[i][j] -= q * u[top][j]
        pivots.append(col)
        top += 1
        if top == rows:
            break
    if want_transform:
        return h, pivots, u
    return h, pivots


def left_kernel(matrix):
    """Basis of the lattice {x : x * matrix = 0}, in row Hermite form."""
    rows = len(matrix)
    if rows == 0:
        return []
    _, pivots, u = row_hermite(matrix, want_transform=True)
    kernel = u[len(pivots):]
    if not kernel:
        return []
    reduced, kp = row_hermite(kernel)
    return [row for row in reduced[: len(kp)]]


def solve_left(matrix, target):
    """Solve ``x * matrix == target`` over the integers.

    Returns x (length = row count) or raises DomainError when no integer
    solution exists.
    """
    rows = len(matrix)
    if rows == 0:
        if any(target):
            raise DomainError("no integer solution (empty matrix)")
        return []
    h, pivots, u = row_hermite(matrix, want_transform=True)
    residue = list(target)
    y = [0] * rows
    for i, col in enumerate(pivots):
        value = residue[col]
        pivot = h[i][col]
        q, r = divmod(value, pivot)
        if r:
            raise DomainError("no integer solution (divisibility)")
        if q:
            y[i] = q
            for j, x in enumerate(h[i]):
                if x:
                    residue[j] -= q * x
    if any(residue):
        raise DomainError("no integer solution (not in row span)")
    # x = y * u
    x = [0] * rows
    for i, yi in enumerate(y):
        if yi:
            for j, uij in enumerate(u[i]):
                x[j] += yi * uij
    return x


def smith_normal_form(matrix, want_u=False, want_v=False):
    """Smith normal form ``u * matrix * v == d``.

    Returns ``(diag, u, v)`` where diag is the list of positive invariant
    factors d1 | d2 | ... and u/v are unimodular (or None when not
    requested).
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows) if want_u else None
    v = identity(cols) if want_v else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        for j in range(cols):
            a[dst][j] += factor * a[src][j]
        if u is not None:
            for j in range(rows):
                u[dst][j] += factor * u[src][j]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        if v is not None:
            for row in v:
                row[dst] += factor * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
        if a[t][t] < 0:
            negate_row(t)
        # enforce divisibility of the remaining block by the pivot
        pivot = a[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        t += 1
    diag = [a[i][i] for i in range(limit) if a[i][i]]
    return diag, u, v


def invariant_factors(matrix):
    diag, _, _ = smith_normal_form(matrix)
    return diag
