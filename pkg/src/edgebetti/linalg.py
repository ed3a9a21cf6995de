"""Exact rank of sparse integer matrices, over the rationals or GF(p).

Matrices arrive as lists of rows, each row a dict column -> nonzero int
coefficient (boundary matrices have entries in {-1, +1}).  Everything is
deterministic: pivot choices break ties by row then column index.

The rational path is fraction free as long as a +-1 pivot exists, which for
simplicial boundary matrices is essentially always; the rare leftover core
falls back to dense Fraction elimination, so the result is exact in every
case.
"""

from __future__ import annotations

from fractions import Fraction

Row = dict[int, int]


def rank_gf2(masks: list[int]) -> int:
    """Rank over GF(2) of rows given as bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for m in masks:
        while m:
            low = m & -m
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = m
                rank += 1
                break
            m ^= piv
    return rank


def rank_mod_p(rows: list[Row], p: int) -> int:
    """Rank over GF(p), by online reduction to row echelon form."""
    pivots: dict[int, Row] = {}
    rank = 0
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {cc: vv * inv % p for cc, vv in r.items()}
                rank += 1
                break
            f = r[c]
            for cc, vv in piv.items():
                nv = (r.get(cc, 0) - f * vv) % p
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        # zero rows contribute nothing
    return rank


def _rank_fraction_dense(rows: list[Row]) -> int:
    cols = sorted({c for r in rows for c in r})
    idx = {c: i for i, c in enumerate(cols)}
    mat = []
    for r in rows:
        dense = [Fraction(0)] * len(cols)
        for c, v in r.items():
            dense[idx[c]] = Fraction(v)
        mat.append(dense)
    rank = 0
    top = 0
    for col in range(len(cols)):
        pivot = None
        for rr in range(top, len(mat)):
            if mat[rr][col]:
                pivot = rr
                break
        if pivot is None:
            continue
        mat[top], mat[pivot] = mat[pivot], mat[top]
        pv = mat[top][col]
        for rr in range(top + 1, len(mat)):
            f = mat[rr][col]
            if f:
                ratio = f / pv
                row = mat[rr]
                piv_row = mat[top]
                for k in range(col, len(cols)):
                    row[k] -= ratio * piv_row[k]
        top += 1
        rank += 1
        if top == len(mat):
            break
    return rank


def rank_rational(rows: list[Row]) -> int:
    """Exact rank over the rationals.

    Repeatedly pivots on a +-1 entry chosen Markowitz style (minimal fill
    estimate (len(row)-1)*(colcount-1)), which keeps all arithmetic in plain
    ints.  If the active matrix still has entries but none of them is +-1,
    the remaining core goes through dense Fraction elimination.
    """
    act = []
    for r in rows:
        rr = {c: v for c, v in r.items() if v}
        if rr:
            act.append(rr)
    rank = 0
    while act:
        colcount: dict[int, int] = {}
        for r in act:
            for c in r:
                colcount[c] = colcount.get(c, 0) + 1
        best = None
        for ri, r in enumerate(act):
            fill_row = len(r) - 1
            for c, v in r.items():
                if v == 1 or v == -1:
                    key = (fill_row * (colcount[c] - 1), ri, c)
                    if best is None or key < best:
                        best = key
        if best is None:
            return rank + _rank_fraction_dense(act)
        _, pi, pc = best
        piv = act.pop(pi)
        pv = piv[pc]
        nxt = []
        for r in act:
            f = r.get(pc)
            if f:
                mult = f * pv  # == f / pv for pv in {1, -1}
                for c, v in piv.items():
                    nv = r.get(c, 0) - mult * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if r:
                nxt.append(r)
        act = nxt
        rank += 1
    return rank


def matrix_rank(rows: list[Row], p: int | None = None) -> int:
    """Rank of an integer matrix over QQ (p None) or GF(p)."""
    if p is None:
        return rank_rational(rows)
    if p == 2:
        masks = []
        for r in rows:
            m = 0
            for c, v in r.items():
                if v & 1:
                    m ^= 1 << c
            if m:
                masks.append(m)
        return rank_gf2(masks)
    return rank_mod_p(rows, p)
