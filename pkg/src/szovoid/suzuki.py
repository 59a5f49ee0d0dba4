"""The Suzuki group Sz(q): generators, the ovoid it acts on, and its small subgroups.

Sz(q) sits inside GL4(q) and is generated by three kinds of matrices over
GF(q) with q = 2^(2n+1) >= 8, writing t for the automorphism theta:

    s(x, y)  lower unitriangular with subdiagonal data built from x, y
             (s(x,y) s(z,w) = s(x+z, y+w+x^t z), so they form a group Q
             of order q^2)
    m(k)     diag(k^(1+2^n), k^(2^n), k^(-2^n), k^(-1-2^n)) for k != 0
             (a cyclic group M of order q-1)
    tau      the involution swapping coordinates 1<->4 and 2<->3

The natural permutation domain is the ovoid: the q^2+1 points

    p(a, b) = [a^(2+t) + a b + b^t, b, a, 1]     for a, b in GF(q)
    infinity = [1, 0, 0, 0]

no three of which are collinear.  s and m fix infinity and act on the
affine parameters by closed formulas (see act_fast); tau swaps infinity
with p(0,0).

Ovoid points are indexed 0..q^2: index 0 is infinity and p(a, b) sits at
1 + a*q + b, i.e. affine points in ascending (a, b) order.  Generator
descriptors are the tuples ("s", x, y), ("m", k) and ("tau",).
"""

from __future__ import annotations

from . import pg3
from .errors import VerificationError
from .gf2m import GF2m
from .pg3 import Mat4, ProjPoint

# The point at infinity of the ovoid, [1,0,0,0].  Affine points are (a, b)
# pairs of field elements.
INFINITY = None

OvoidPoint = tuple[int, int] | None
GenDescriptor = tuple

SUBGROUP_ORDERS = {
    "Q": lambda q: q * q,
    "Q0": lambda q: q,
    "M": lambda q: q - 1,
    "H": lambda q: q * q * (q - 1),
    "K": lambda q: q * (q - 1),
}


def gen_s(field: GF2m, x: int, y: int) -> Mat4:
    """The unitriangular generator s(x, y).

    Row 4 is forced by the action: it is the image of [0,0,0,1] = p(0,0),
    which must be the coordinate vector of p(x, y + x^(1+t)), hence the
    x^(2+t) in the corner entry.
    """
    mul, theta = field.mul, field.theta
    xt = theta(x)
    x1t = mul(x, xt)                    # x^(1+theta)
    a41 = mul(x, x1t) ^ mul(x, y) ^ theta(y)   # x^(2+theta) + x y + y^theta
    a42 = x1t ^ y
    return ((1, 0, 0, 0),
            (x, 1, 0, 0),
            (y, xt, 1, 0),
            (a41, a42, x, 1))


def gen_m(field: GF2m, kappa: int) -> Mat4:
    """The diagonal generator m(kappa), kappa nonzero."""
    if kappa == 0:
        raise ValueError("m(kappa) requires kappa != 0")
    a = field.pow(kappa, field.half_r_exp)   # kappa^(2^n)
    d1 = field.mul(kappa, a)                 # kappa^(1+2^n)
    return ((d1, 0, 0, 0),
            (0, a, 0, 0),
            (0, 0, field.inv(a), 0),
            (0, 0, 0, field.inv(d1)))


def gen_tau(field: GF2m) -> Mat4:
    del field
    return ((0, 0, 0, 1),
            (0, 0, 1, 0),
            (0, 1, 0, 0),
            (1, 0, 0, 0))


def gen_matrix(field: GF2m, gen: GenDescriptor) -> Mat4:
    """Matrix of a generator descriptor."""
    kind = gen[0]
    if kind == "s":
        return gen_s(field, gen[1], gen[2])
    if kind == "m":
        return gen_m(field, gen[1])
    if kind == "tau":
        return gen_tau(field)
    raise ValueError(f"unknown generator descriptor {gen!r}")


def point_vector(field: GF2m, alpha: int, beta: int) -> tuple[int, int, int, int]:
    """The defining (uncanonicalized) coordinate vector of p(alpha, beta)."""
    mul, theta = field.mul, field.theta
    first = mul(mul(alpha, alpha), theta(alpha)) ^ mul(alpha, beta) ^ theta(beta)
    return (first, beta, alpha, 1)


def point_p(field: GF2m, alpha: int, beta: int) -> ProjPoint:
    """Canonical projective point p(alpha, beta) of the ovoid."""
    return pg3.normalize(field, point_vector(field, alpha, beta))


class Ovoid:
    """The q^2+1 ovoid points with both symbolic and projective views.

    points[i] is None for infinity or an (alpha, beta) pair; proj[i] is the
    canonical projective point; index_of inverts proj.  Immutable after
    construction.
    """

    def __init__(self, field: GF2m):
        self.field = field
        q = field.q
        points: list = [INFINITY]
        proj: list[ProjPoint] = [(1, 0, 0, 0)]
        for a in field.elements():
            for b in field.elements():
                points.append((a, b))
                proj.append(point_p(field, a, b))
        index = {p: i for i, p in enumerate(proj)}
        if len(index) != q * q + 1:
            raise VerificationError(
                "duplicate projective point while building the ovoid")
        self.points = points
        self.proj = proj
        self._index = index

    def __len__(self) -> int:
        return len(self.points)

    def index_of(self, p: ProjPoint) -> int:
        i = self._index.get(p)
        if i is None:
            raise ValueError(f"{p!r} is not an ovoid point")
        return i

    def index_or_none(self, p: ProjPoint) -> int | None:
        return self._index.get(p)

    def contains(self, p: ProjPoint) -> bool:
        return p in self._index

    def affine_index(self, alpha: int, beta: int) -> int:
        return 1 + alpha * self.field.q + beta

    def proj_of(self, pt) -> ProjPoint:
        if pt is INFINITY:
            return (1, 0, 0, 0)
        return self.proj[self.affine_index(pt[0], pt[1])]


def build_ovoid(field: GF2m) -> Ovoid:
    return Ovoid(field)


def act_fast(ovoid: Ovoid, pt, gen: GenDescriptor):
    """Image of an ovoid point under one generator.

    s and m fix infinity and act on affine parameters by

        (a, b) ^ s(x,y) = (a + x, b + y + a x^t + x^(1+t))
        (a, b) ^ m(k)   = (a k, b k^(1+t))

    tau (or any unrecognised descriptor) goes through the exact matrix
    action followed by an index lookup, which doubles as the cross-check
    path for the closed formulas.
    """
    field = ovoid.field
    kind = gen[0]
    if kind == "s":
        if pt is INFINITY:
            return INFINITY
        a, b = pt
        x, y = gen[1], gen[2]
        xt = field.theta(x)
        return (a ^ x, b ^ y ^ field.mul(a, xt) ^ field.mul(x, xt))
    if kind == "m":
        if pt is INFINITY:
            return INFINITY
        a, b = pt
        k = gen[1]
        return (field.mul(a, k), field.mul(b, field.mul(k, field.theta(k))))
    mat = gen_matrix(field, gen)
    image = pg3.act(field, ovoid.proj_of(pt), mat)
    return ovoid.points[ovoid.index_of(image)]


def subgroup(field: GF2m, name: str) -> list[Mat4]:
    """Enumerate one of the standard subgroups as explicit matrices.

    Q  = all s(x, y)                      order q^2
    Q0 = all s(0, y)                      order q      (the involutions in Q)
    M  = all m(kappa)                     order q-1
    H  = all s(x, y) m(kappa)             order q^2 (q-1), the infinity stabilizer
    K  = all s(0, y) m(kappa)             order q (q-1)

    The returned list is duplicate-free; a collision means broken arithmetic
    and raises.
    """
    els = field.elements()
    nz = field.nonzero_elements()
    if name == "Q":
        mats = [gen_s(field, x, y) for x in els for y in els]
    elif name == "Q0":
        mats = [gen_s(field, 0, y) for y in els]
    elif name == "M":
        mats = [gen_m(field, k) for k in nz]
    elif name == "H":
        ms = [gen_m(field, k) for k in nz]
        mats = [pg3.mat_mul(field, gen_s(field, x, y), m)
                for x in els for y in els for m in ms]
    elif name == "K":
        ms = [gen_m(field, k) for k in nz]
        mats = [pg3.mat_mul(field, gen_s(field, 0, y), m)
                for y in els for m in ms]
    else:
        raise ValueError(f"unknown subgroup {name!r}")
    expected = SUBGROUP_ORDERS[name](field.q)
    if len(set(mats)) != len(mats) or len(mats) != expected:
        raise VerificationError(f"subgroup {name} enumeration is not "
                                f"{expected} distinct matrices")
    return mats


def k_orbits(ovoid: Ovoid) -> tuple[frozenset, frozenset, frozenset]:
    """The three orbits of K = <s(0,y), m(kappa)> on ovoid indices.

    Computed as plain orbit closures under all q + (q-1) generators of K,
    then checked against the expected partition: {infinity}, the q points
    p(0, beta), and the q(q-1) points p(alpha, beta) with alpha != 0.
    Any mismatch raises.
    """
    field = ovoid.field
    q = field.q
    v = q * q + 1
    mul, theta = field.mul, field.theta
    k1theta = {k: mul(k, theta(k)) for k in field.nonzero_elements()}

    def images(i: int) -> list[int]:
        if i == 0:
            return [0]
        a, b = divmod(i - 1, q)
        out = [1 + a * q + (b ^ y) for y in field.elements()]  # s(0, y)
        out.extend(1 + mul(a, k) * q + mul(b, kt)              # m(kappa)
                   for k, kt in k1theta.items())
        return out

    seen = bytearray(v)
    orbits = []
    for start in range(v):
        if seen[start]:
            continue
        seen[start] = 1
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for j in images(i):
                    if not seen[j]:
                        seen[j] = 1
                        orbit.add(j)
                        nxt.append(j)
            frontier = nxt
        orbits.append(frozenset(orbit))

    expected = (frozenset({0}),
                frozenset(range(1, q + 1)),
                frozenset(range(q + 1, v)))
    if len(orbits) != 3:
        raise VerificationError(f"K has {len(orbits)} orbits, expected 3")
    if set(orbits) != set(expected):
        raise VerificationError("K-orbits do not match the expected partition")
    return expected


def verify_generator_coverage(field: GF2m) -> int:
    """Certify that {s(1,0), s(0,1), m(zeta), tau} generates everything.

    Exhibits every s(x, y) and every m(kappa) as an explicit product of the
    four reduced generators and confirms each factorization by matrix
    multiplication:

      * m(kappa) = m(zeta)^i for the least primitive zeta,
      * s(kappa, 0) = m(kappa)^-1 s(1,0) m(kappa),
      * s(0, kappa^(1+t)) = m(kappa)^-1 s(0,1) m(kappa), with
        kappa -> kappa^(1+t) a bijection of the nonzero elements,
      * s(x, y) = s(x, 0) s(0, y).

    Returns the number of certified matrices (q^2 + q - 1); raises if any
    identity fails, which would mean the reduced set generates a proper
    subgroup.
    """
    q = field.q
    zeta = field.primitive_element
    mm = lambda a, b: pg3.mat_mul(field, a, b)

    powers = set()
    acc = pg3.identity(field)
    mz = gen_m(field, zeta)
    for _ in range(q - 1):
        acc = mm(acc, mz)
        powers.add(acc)
    expected_m = {gen_m(field, k) for k in field.nonzero_elements()}
    if powers != expected_m:
        raise VerificationError("powers of m(zeta) do not exhaust M")

    s10 = gen_s(field, 1, 0)
    s01 = gen_s(field, 0, 1)
    certified = q - 1
    s_row = {0: pg3.identity(field)}        # s(x, 0) by x
    s_col = {0: pg3.identity(field)}        # s(0, y) by y
    for k in field.nonzero_elements():
        mk = gen_m(field, k)
        mk_inv = gen_m(field, field.inv(k))
        if mm(mk, mk_inv) != pg3.identity(field):
            raise VerificationError("m(kappa) inverse mismatch")
        conj_s10 = mm(mm(mk_inv, s10), mk)
        if conj_s10 != gen_s(field, k, 0):
            raise VerificationError(f"s({k}, 0) is not the expected conjugate")
        s_row[k] = conj_s10
        y = field.mul(k, field.theta(k))    # kappa^(1+theta)
        conj_s01 = mm(mm(mk_inv, s01), mk)
        if conj_s01 != gen_s(field, 0, y):
            raise VerificationError(f"s(0, {y}) is not the expected conjugate")
        s_col[y] = conj_s01
    if len(s_col) != q:
        raise VerificationError("kappa^(1+theta) is not a bijection on F*")

    for x in field.elements():
        for y in field.elements():
            if mm(s_row[x], s_col[y]) != gen_s(field, x, y):
                raise VerificationError(f"s({x}, {y}) factorization failed")
            certified += 1
    return certified
