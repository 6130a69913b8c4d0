"""Exact matrix rank over Q or a prime field, dense and sparse paths.

Matrices arrive as column dictionaries {row: value} with integer values
(boundary matrices are mostly +-1 and very sparse).  Rank is all the
homology computation needs, so nothing else is implemented.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Sequence

# auto path selection: matrices this small are always dense; above the size
# cutoff the sparse code wins whenever density stays low
DENSE_CELL_LIMIT = 40_000
SPARSE_DENSITY = 0.2


def rank(
    columns: Sequence[Mapping[int, int]],
    nrows: int,
    modulus: Optional[int] = None,
    method: str = "auto",
) -> int:
    """Rank of the nrows x len(columns) matrix given by sparse columns.

    modulus None means exact rational arithmetic; otherwise arithmetic is in
    GF(modulus) with modulus prime.
    """
    ncols = len(columns)
    if nrows == 0 or ncols == 0:
        return 0
    if method not in ("auto", "dense", "sparse"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        nnz = sum(len(c) for c in columns)
        big = nrows * ncols > DENSE_CELL_LIMIT
        method = "sparse" if big and nnz <= SPARSE_DENSITY * nrows * ncols else "dense"
    if method == "dense":
        rows = [[0] * ncols for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                rows[i][j] = v % modulus if modulus else v
        return _rank_dense_modp(rows, modulus) if modulus else _rank_dense_q(rows)
    rows_s: list[dict[int, int]] = [{} for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            v = v % modulus if modulus else v
            if v:
                rows_s[i][j] = v
    return _rank_sparse(rows_s, modulus)


def _exact_div(a, b):
    # quotient a/b staying in int when exact, else Fraction
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return Fraction(a) / Fraction(b)


def _rank_dense_q(rows: list[list]) -> int:
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    for c in range(ncols):
        # prefer a +-1 pivot so row operations stay in int
        p = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                if p is None:
                    p = i
                if v == 1 or v == -1:
                    p = i
                    break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if not v:
                continue
            f = _exact_div(v, pv)
            row = rows[i]
            for j, pj in nz:
                row[j] -= f * pj
        r += 1
        if r == nrows:
            break
    return r


def _rank_dense_modp(rows: list[list[int]], p: int) -> int:
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        nz = [(j, prow[j]) for j in range(c, ncols) if prow[j] % p]
        for i in range(r + 1, nrows):
            v = rows[i][c] % p
            if not v:
                continue
            f = v * inv % p
            row = rows[i]
            for j, pj in nz:
                row[j] = (row[j] - f * pj) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_sparse(rows: list[dict[int, int]], modulus: Optional[int]) -> int:
    live = [r for r in rows if r]
    rk = 0
    while live:
        # cheapest remaining row, then its rarest column (deterministic ties)
        bi = min(range(len(live)), key=lambda i: (len(live[i]), i))
        brow = live.pop(bi)
        occ: dict[int, int] = {}
        for r in live:
            for c in r:
                if c in brow:
                    occ[c] = occ.get(c, 0) + 1
        pc = min(brow, key=lambda c: (occ.get(c, 0), c))
        pv = brow[pc]
        rk += 1
        inv = pow(pv, -1, modulus) if modulus else None
        nxt = []
        for r in live:
            v = r.get(pc)
            if v is None:
                nxt.append(r)
                continue
            f = v * inv % modulus if modulus else _exact_div(v, pv)
            for c, bv in brow.items():
                x = r.get(c, 0) - f * bv
                if modulus:
                    x %= modulus
                if x:
                    r[c] = x
                else:
                    r.pop(c, None)
            if r:
                nxt.append(r)
        live = nxt
    return rk
