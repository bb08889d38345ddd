"""Pure-Python versions of the hot kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled code is tested against.
"""

from __future__ import annotations


def rref_mod_p(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p).

    Pivots are the first nonzero entry in column order. Returns the nonzero
    reduced rows and the pivot column of each.
    """
    work = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(work)
    for col in range(ncols):
        if r == nrows:
            break
        pivot = -1
        for i in range(r, nrows):
            if work[i][col]:
                pivot = i
                break
        if pivot < 0:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            for j in range(col, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[col]
            if f:
                for j in range(col, ncols):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        pivots.append(col)
        r += 1
    return work[:r], pivots


def sparse_mul_mod_p(
    u: list[int], v: list[int], table: list[list[list[tuple[int, int]]]], p: int
) -> list[int]:
    """Multiply two coordinate vectors through a sparse structure-constant table."""
    out = [0] * len(u)
    nz_v = [(j, b) for j, b in enumerate(v) if b]
    if not nz_v:
        return out
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for j, b in nz_v:
            c = a * b
            for k, t in row[j]:
                out[k] = (out[k] + c * t) % p
    return out
