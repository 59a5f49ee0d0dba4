"""Permutation realizations on ovoid indices, and generic orbit machinery.

A group element acting on an ovoid of v = q^2+1 points is stored as a numpy
int32 array perm of length v with perm[i] = image of index i.  Composition
follows the right action, so the permutation of a matrix product g h is
compose(perm_g, perm_h) = perm_h[perm_g].

Orbit computations (points, k-subsets, ordered pairs, flags) are plain
breadth-first closures, vectorised per generator over the whole frontier.
They are deliberately independent of any group theory beyond the generator
images, so their counts can serve as oracles for order and parameter
formulas.
"""

from __future__ import annotations

import numpy as np

from . import pg3, suzuki
from .errors import VerificationError
from .gf2m import GF2m
from .suzuki import GenDescriptor, Ovoid

DEFAULT_CLOSURE_BUDGET = 1 << 16


class GeneratorSet:
    """Permutations of a generating set, with their descriptors."""

    def __init__(self, perms: list[np.ndarray], labels: list[GenDescriptor]):
        if len(perms) != len(labels):
            raise ValueError("perms and labels must be parallel")
        self.perms = perms
        self.labels = labels
        self.degree = len(perms[0])

    def __len__(self) -> int:
        return len(self.perms)


def identity_perm(v: int) -> np.ndarray:
    return np.arange(v, dtype=np.int32)


def compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Permutation of "f then g" (matches the matrix product f g)."""
    return g[f]


def perm_inverse(p: np.ndarray) -> np.ndarray:
    return np.argsort(p).astype(np.int32)


def to_perm(ovoid: Ovoid, mat) -> np.ndarray:
    """Permutation of a matrix via the exact projective action.

    Raises if any image falls outside the ovoid, which signals a foreign
    matrix (or an arithmetic bug).
    """
    field = ovoid.field
    images = np.empty(len(ovoid), dtype=np.int32)
    lookup = ovoid.index_or_none
    for i, p in enumerate(ovoid.proj):
        j = lookup(pg3.act(field, p, mat))
        if j is None:
            raise ValueError("matrix does not preserve the ovoid")
        images[i] = j
    if len(np.unique(images)) != len(ovoid):
        raise ValueError("matrix does not act bijectively on the ovoid")
    return images


def gen_perm(ovoid: Ovoid, gen: GenDescriptor) -> np.ndarray:
    """Permutation of one generator descriptor, via the closed formulas.

    s and m images are computed directly on the (alpha, beta) grid with the
    field's numpy tables; tau and anything unrecognised goes through the
    matrix route.
    """
    field = ovoid.field
    q = field.q
    if gen[0] in ("s", "m") and field.m <= 12:
        mul_t, theta_t = field.np_tables()
        a = np.repeat(np.arange(q, dtype=np.int32), q)
        b = np.tile(np.arange(q, dtype=np.int32), q)
        if gen[0] == "s":
            x, y = gen[1], gen[2]
            xt = int(theta_t[x])
            x1t = int(mul_t[x, xt])
            a2 = a ^ x
            b2 = b ^ (y ^ x1t) ^ mul_t[a, xt]
        else:
            k = gen[1]
            if k == 0:
                raise ValueError("m(kappa) requires kappa != 0")
            k1t = int(mul_t[k, theta_t[k]])
            a2 = mul_t[a, k]
            b2 = mul_t[b, k1t]
        perm = np.empty(q * q + 1, dtype=np.int32)
        perm[0] = 0
        perm[1:] = 1 + a2 * q + b2
        return perm
    if gen[0] in ("s", "m"):
        perm = np.empty(len(ovoid), dtype=np.int32)
        perm[0] = 0
        for i, pt in enumerate(ovoid.points[1:], start=1):
            a2, b2 = suzuki.act_fast(ovoid, pt, gen)
            perm[i] = ovoid.affine_index(a2, b2)
        return perm
    return to_perm(ovoid, suzuki.gen_matrix(field, gen))


def generator_set(ovoid: Ovoid, kind: str = "default") -> GeneratorSet:
    """Standard generating sets for the groups acting on the ovoid.

    "default" -- {s(1,0), s(0,1), m(zeta), tau} with zeta the least
        primitive element.  Small, so orbit closures stay cheap; it
        generates the same group as "full", which
        suzuki.verify_generator_coverage certifies by explicit
        factorizations.
    "full"    -- every s(x, y), plus m(zeta), plus tau.
    "Q"       -- every s(x, y).
    "K"       -- every s(0, y) and every m(kappa): the block stabilizer.
    "H"       -- every s(x, y) and every m(kappa): the infinity stabilizer.
    """
    field = ovoid.field
    zeta = field.primitive_element
    if kind == "default":
        labels = [("s", 1, 0), ("s", 0, 1), ("m", zeta), ("tau",)]
    elif kind == "full":
        labels = [("s", x, y) for x in field.elements() for y in field.elements()]
        labels += [("m", zeta), ("tau",)]
    elif kind == "Q":
        labels = [("s", x, y) for x in field.elements() for y in field.elements()]
    elif kind == "K":
        labels = [("s", 0, y) for y in field.elements()]
        labels += [("m", k) for k in field.nonzero_elements()]
    elif kind == "H":
        labels = [("s", x, y) for x in field.elements() for y in field.elements()]
        labels += [("m", k) for k in field.nonzero_elements()]
    else:
        raise ValueError(f"unknown generator set kind {kind!r}")
    return GeneratorSet([gen_perm(ovoid, g) for g in labels], labels)


def point_orbit(gens: GeneratorSet, start: int) -> np.ndarray:
    """Sorted orbit of one index under the generator images."""
    v = gens.degree
    seen = np.zeros(v, dtype=bool)
    seen[start] = True
    frontier = np.array([start], dtype=np.int32)
    while frontier.size:
        nxt = []
        for g in gens.perms:
            imgs = g[frontier]
            fresh = imgs[~seen[imgs]]
            if fresh.size:
                fresh = np.unique(fresh)
                seen[fresh] = True
                nxt.append(fresh)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int32)
    return np.flatnonzero(seen).astype(np.int32)


def _block_dtype(v: int):
    return np.uint16 if v <= 0xFFFF else np.int32


def set_orbit(gens: GeneratorSet, base) -> np.ndarray:
    """Orbit of a point set under the induced action on k-subsets.

    Returns the blocks as a (count, k) array of ascending rows, in
    breadth-first discovery order.
    """
    dtype = _block_dtype(gens.degree)
    base = np.sort(np.asarray(base)).astype(dtype)
    k = base.size
    seen = {base.tobytes()}
    out = [base]
    frontier = base.reshape(1, k)
    while frontier.size:
        fresh = []
        for g in gens.perms:
            imgs = np.sort(g[frontier].astype(dtype), axis=1)
            for row in imgs:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
        if not fresh:
            break
        out.extend(fresh)
        frontier = np.stack(fresh)
    return np.stack(out)


def ordered_pair_orbit(gens: GeneratorSet, pair: tuple[int, int]) -> int:
    """Size of the orbit of an ordered pair under the diagonal action."""
    i, j = pair
    if i == j:
        raise ValueError("ordered pair must have distinct entries")
    v = gens.degree
    seen = np.zeros(v * v, dtype=bool)
    start = i * v + j
    seen[start] = True
    count = 1
    frontier = np.array([start], dtype=np.int64)
    perms = [g.astype(np.int64) for g in gens.perms]
    while frontier.size:
        fi, fj = np.divmod(frontier, v)
        nxt = []
        for g in perms:
            codes = g[fi] * v + g[fj]
            fresh = codes[~seen[codes]]
            if fresh.size:
                fresh = np.unique(fresh)
                seen[fresh] = True
                count += fresh.size
                nxt.append(fresh)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
    return count


def flag_orbit_size(gens: GeneratorSet, blocks: np.ndarray,
                    flag: tuple[int, int] | None = None) -> int:
    """Orbit size of an incident (point, block) pair.

    The generators permute the given block list; their action on block
    indices is recovered by sorted-row lookup, so the blocks array must be
    closed under every generator (it is, for a set_orbit result).
    """
    nblocks, k = blocks.shape
    dtype = blocks.dtype
    index = {row.tobytes(): t for t, row in enumerate(blocks)}
    block_perms = []
    for g in gens.perms:
        imgs = np.sort(g[blocks].astype(dtype), axis=1)
        block_perms.append(
            np.fromiter((index[row.tobytes()] for row in imgs),
                        count=nblocks, dtype=np.int64))
    if flag is None:
        flag = (int(blocks[0][0]), 0)
    point, t = flag
    if point not in blocks[t]:
        raise ValueError("flag must be an incident (point, block) pair")
    v = gens.degree
    seen = np.zeros(v * nblocks, dtype=bool)
    start = point * nblocks + t
    seen[start] = True
    count = 1
    frontier = np.array([start], dtype=np.int64)
    pperms = [g.astype(np.int64) for g in gens.perms]
    while frontier.size:
        fp, ft = np.divmod(frontier, nblocks)
        nxt = []
        for g, bg in zip(pperms, block_perms):
            codes = g[fp] * nblocks + bg[ft]
            fresh = codes[~seen[codes]]
            if fresh.size:
                fresh = np.unique(fresh)
                seen[fresh] = True
                count += fresh.size
                nxt.append(fresh)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
    return count


def stabilizer_order(orbit_size: int, group_order: int) -> int:
    """Stabilizer order by orbit counting; inputs must divide exactly."""
    if orbit_size <= 0 or group_order % orbit_size:
        raise ValueError(
            f"orbit size {orbit_size} does not divide group order {group_order}")
    return group_order // orbit_size


def closure(gens: GeneratorSet, budget: int = DEFAULT_CLOSURE_BUDGET) -> np.ndarray:
    """All elements of the generated group, as a (order, v) permutation array.

    Breadth-first product closure of the generators.  Exceeding the element
    budget raises, which keeps accidental closures of the big groups from
    eating all memory.
    """
    seen = {}
    frontier = []
    for g in gens.perms:
        key = g.tobytes()
        if key not in seen:
            seen[key] = g
            frontier.append(g)
    frontier = np.stack(frontier)
    out = [frontier]
    while frontier.size:
        fresh = []
        for g in gens.perms:
            prods = g[frontier]         # row f -> g[f] = compose(f, g)
            for row in prods:
                key = row.tobytes()
                if key not in seen:
                    seen[key] = row
                    fresh.append(row)
        if len(seen) > budget:
            raise VerificationError("group too large for enumeration")
        if not fresh:
            break
        frontier = np.stack(fresh)
        out.append(frontier)
    return np.concatenate(out)


def setwise_stabilizer(elements: np.ndarray, index_set) -> np.ndarray:
    """Rows of a permutation array mapping the given index set onto itself."""
    idx = np.sort(np.asarray(list(index_set), dtype=np.int64))
    imgs = np.sort(elements[:, idx], axis=1)
    mask = (imgs == idx).all(axis=1)
    return elements[mask]


def perm_set(perms: np.ndarray) -> set[bytes]:
    """Hashable view of a permutation array, for set comparisons."""
    return {row.tobytes() for row in np.asarray(perms, dtype=np.int32)}
