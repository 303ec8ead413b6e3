"""Small exact linear algebra over any field-like scalar (rationals, Gaussian
rationals).  Matrices are lists of lists; nothing here is performance
critical, everything is plain Gaussian elimination."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


def rref(rows: Sequence[Sequence], zero=None) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[List]:
    """One solution x of A x = b (free variables set to zero), or None if
    the system is inconsistent."""
    if not a:
        return []
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = aug[0][0] - aug[0][0]
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def solve_unique(a: Sequence[Sequence], b: Sequence) -> List:
    """Solution of a full-rank square system; raises on singular input."""
    x = solve(a, b)
    if x is None or rank(a) != len(a[0]):
        raise ValueError("singular or inconsistent linear system")
    return x


def nullspace(rows: Sequence[Sequence]) -> List[List]:
    """Basis of the right kernel."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    zero = rows[0][0] - rows[0][0]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = zero + 1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def column_space_basis(rows: Sequence[Sequence]) -> List[List]:
    """Basis of the column space, as column vectors."""
    red, pivots = rref(rows)
    cols = list(zip(*rows))
    return [list(cols[c]) for c in pivots]
