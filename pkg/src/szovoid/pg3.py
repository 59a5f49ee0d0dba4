"""Exact 4x4 linear algebra over GF(q) and points of PG(3,q).

Matrices are tuples of four 4-tuples of field elements (row, column order,
so entry ij of the usual e_ij basis matrix sits at [i-1][j-1]).  Projective
points are canonical 4-tuples: the first nonzero coordinate is scaled to 1,
which makes equality of points plain tuple equality and lets them key dicts.

The group action used throughout is the right action of matrices on row
vectors, p -> normalize(p @ g); see act().
"""

from __future__ import annotations

from collections.abc import Sequence

from .gf2m import GF2m

Mat4 = tuple[tuple[int, int, int, int], ...]
ProjPoint = tuple[int, int, int, int]


def identity(field: GF2m) -> Mat4:
    del field  # entries 0/1 are field independent
    return ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def mat_mul(field: GF2m, a: Mat4, b: Mat4) -> Mat4:
    """Matrix product over the field."""
    mul = field.mul
    out = []
    for i in range(4):
        ai = a[i]
        row = []
        for j in range(4):
            acc = 0
            for k in range(4):
                x = ai[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc ^= mul(x, y)
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_inv(field: GF2m, a: Mat4) -> Mat4:
    """Inverse by Gauss-Jordan elimination; raises on a singular matrix."""
    mul, inv = field.mul, field.inv
    aug = [list(a[i]) + [int(i == j) for j in range(4)] for i in range(4)]
    for col in range(4):
        piv = next((r for r in range(col, 4) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        if pv != 1:
            pi = inv(pv)
            aug[col] = [mul(pi, x) for x in aug[col]]
        prow = aug[col]
        for r in range(4):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x ^ mul(f, y) for x, y in zip(aug[r], prow)]
    return tuple(tuple(row[4:]) for row in aug)


def rank(field: GF2m, rows: Sequence[Sequence[int]]) -> int:
    """Row rank by exact Gaussian elimination."""
    mul, inv = field.mul, field.inv
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        pv = work[rk][col]
        if pv != 1:
            pi = inv(pv)
            work[rk] = [mul(pi, x) for x in work[rk]]
        prow = work[rk]
        for r in range(rk + 1, len(work)):
            f = work[r][col]
            if f:
                work[r] = [x ^ mul(f, y) for x, y in zip(work[r], prow)]
        rk += 1
        if rk == len(work):
            break
    return rk


def normalize(field: GF2m, vec: Sequence[int]) -> ProjPoint:
    """Canonical representative: first nonzero coordinate scaled to 1."""
    for c in vec:
        if c:
            if c == 1:
                return tuple(vec)
            ci = field.inv(c)
            mul = field.mul
            return tuple(mul(ci, x) for x in vec)
    raise ValueError("cannot normalize the zero vector")


def act(field: GF2m, p: Sequence[int], g: Mat4) -> ProjPoint:
    """Image of a projective point under g: normalize(p @ g).

    This is a right action: act(act(p, g), h) == act(p, mat_mul(g, h)).
    """
    mul = field.mul
    w = [0, 0, 0, 0]
    for i in range(4):
        x = p[i]
        if x:
            gi = g[i]
            for j in range(4):
                y = gi[j]
                if y:
                    w[j] ^= mul(x, y)
    return normalize(field, w)


def collinear(field: GF2m, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> bool:
    """Whether three pairwise-distinct projective points lie on a line."""
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise ValueError("points must be pairwise distinct")
    return rank(field, [p1, p2, p3]) <= 2


class LineScanner:
    """Reduces points against a fixed pair, for bulk collinearity scans.

    Equivalent to rank-based collinearity but the elimination of the two
    base points is done once, so scanning many third points is cheap.
    """

    def __init__(self, field: GF2m, p1: ProjPoint, p2: ProjPoint):
        self._field = field
        mul = field.mul
        r1 = list(p1)
        r2 = list(p2)
        c1 = next(i for i, x in enumerate(r1) if x)
        # canonical points have leading coefficient 1 already
        if r2[c1]:
            f = r2[c1]
            r2 = [x ^ mul(f, y) for x, y in zip(r2, r1)]
        c2 = next(i for i, x in enumerate(r2) if x)
        if r2[c2] != 1:
            pi = field.inv(r2[c2])
            r2 = [mul(pi, x) for x in r2]
        self._r1, self._c1 = r1, c1
        self._r2, self._c2 = r2, c2

    def on_line(self, p: ProjPoint) -> bool:
        mul = self._field.mul
        w = list(p)
        f = w[self._c1]
        if f:
            r1 = self._r1
            w = [x ^ mul(f, y) for x, y in zip(w, r1)]
        f = w[self._c2]
        if f:
            r2 = self._r2
            w = [x ^ mul(f, y) for x, y in zip(w, r2)]
        return not any(w)
