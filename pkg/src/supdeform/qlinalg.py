"""Small exact linear algebra over Q (Fraction entries)."""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0}, one vector per free column, free coordinate = 1."""
    reduced, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[free]
        basis.append(tuple(vec))
    return basis


def solve(rows: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of A x = b, or None if inconsistent."""
    if not rows:
        return None if any(rhs) else ()
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    ncols = len(rows[0])
    for row, pc in zip(reduced, pivots):
        if pc == ncols:
            return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return tuple(x)


def solve_in_span(span_rows: list[list[Fraction]], target: list[Fraction]):
    """Coefficients c with sum_i c_i span_rows[i] = target, or None."""
    if not span_rows:
        return None if any(target) else ()
    cols = len(span_rows)
    rows = [[span_rows[j][i] for j in range(cols)] for i in range(len(target))]
    return solve(rows, list(target))


def row_space_equal(a: list[list[Fraction]], b: list[list[Fraction]]) -> bool:
    return rref(a)[0] == rref(b)[0]
