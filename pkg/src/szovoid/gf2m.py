"""Arithmetic in GF(2^m) for odd m >= 3, including the Suzuki field automorphism.

Field elements are plain ints: bit i of the int is the coefficient of x^i in
the polynomial-basis representative, so 0 and 1 are the additive and
multiplicative identities and addition is xor.  A field is described by a
GF2m object holding the degree m and the irreducible modulus; all operations
are pure functions of their arguments, so fields and elements can be shared
freely between threads.

Writing q = 2^m with m = 2n+1, the map theta: a -> a**(2**(n+1)) is a field
automorphism whose square is the Frobenius a -> a*a.  It is exposed as
GF2m.theta together with the exponents r_exp = 2**(n+1) and half_r_exp = 2**n
needed by the Suzuki generator matrices.

Multiplication is shift-and-add with conditional reduction; for m <= 16 a
log/antilog table pair is built at construction and used as a fast path
(mul_schoolbook stays available so the two can be cross-checked).
"""

from __future__ import annotations

import functools

import numpy as np

# Lexicographically least irreducible polynomial of each supported odd degree,
# packed with bit i = coefficient of x^i.
DEFAULT_POLYS: dict[int, int] = {
    3: 0b1011,              # x^3 + x + 1
    5: 0b100101,            # x^5 + x^2 + 1
    7: 0b10000011,          # x^7 + x + 1
    9: 0b1000010001,        # x^9 + x^4 + 1
    11: 0b100000000101,     # x^11 + x^2 + 1
    13: 0b10000000011011,   # x^13 + x^4 + x^3 + x + 1
}

_TABLE_MAX_DEGREE = 16


def poly_mul_gf2(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials packed in ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod_gf2(a: int, mod: int) -> int:
    """Remainder of a modulo mod in GF(2)[x]."""
    dm = mod.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= mod << (da - dm)
        da = a.bit_length()
    return a


def poly_gcd_gf2(a: int, b: int) -> int:
    """Greatest common divisor in GF(2)[x]."""
    while b:
        a, b = b, poly_mod_gf2(a, b)
    return a


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: int) -> bool:
    """Deterministic irreducibility test for a GF(2)[x] polynomial.

    Quick rejections first (roots at 0 and 1), then the definitive test:
    x^(2^m) == x mod poly, and gcd(x^(2^(m/p)) - x, poly) == 1 for every
    prime p dividing m.  The gcd form is needed so that products of
    distinct-degree factors cannot slip through.
    """
    m = poly.bit_length() - 1
    if m < 1:
        return False
    if poly & 1 == 0:
        return False            # root at 0
    if poly.bit_count() % 2 == 0:
        return False            # root at 1
    if m == 1:
        return True
    x = 0b10
    t = x
    for _ in range(m):
        t = poly_mod_gf2(poly_mul_gf2(t, t), poly)
    if t != x:
        return False
    for p in _prime_divisors(m):
        t = x
        for _ in range(m // p):
            t = poly_mod_gf2(poly_mul_gf2(t, t), poly)
        if poly_gcd_gf2(t ^ x, poly) != 1:
            return False
    return True


class GF2m:
    """The field GF(q), q = 2^m with m = 2n+1 odd, m >= 3.

    Attributes
    ----------
    m, n : degree and the n of m = 2n+1
    q : field size 2^m
    r_exp : 2^(n+1), the exponent of theta (r_exp**2 == 2*q)
    half_r_exp : 2^n, the exponent appearing in the diagonal generators
    poly : the irreducible modulus, bit i = coefficient of x^i
    """

    def __init__(self, m: int | None = None, *, q: int | None = None,
                 poly: int | None = None):
        if (m is None) == (q is None):
            raise ValueError("pass exactly one of m or q")
        if q is not None:
            m = q.bit_length() - 1
            if m < 1 or q != 1 << m:
                raise ValueError(f"q={q} is not a power of 2")
        assert m is not None
        if m % 2 == 0 or m < 3:
            raise ValueError(
                f"field degree m={m} not supported: m must be odd and >= 3 "
                "(q = 2^m >= 8)")
        if poly is None:
            poly = DEFAULT_POLYS.get(m)
            if poly is None:
                raise ValueError(f"no default modulus for m={m}; pass poly=")
        if poly.bit_length() - 1 != m:
            raise ValueError(
                f"modulus 0x{poly:X} has degree {poly.bit_length() - 1}, "
                f"expected {m}")
        if not is_irreducible(poly):
            raise ValueError(f"modulus 0x{poly:X} is reducible over GF(2)")

        self.m = m
        self.n = (m - 1) // 2
        self.q = 1 << m
        self.r_exp = 1 << (self.n + 1)
        self.half_r_exp = 1 << self.n
        self.poly = poly

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._np_tables: tuple[np.ndarray, np.ndarray] | None = None
        if m <= _TABLE_MAX_DEGREE:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, poly=0x{self.poly:X})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2m) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    # -- core arithmetic ---------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        """Sum of two elements (xor; every element is its own negative)."""
        return a ^ b

    def mul_schoolbook(self, a: int, b: int) -> int:
        """Shift-and-add product reduced modulo the field polynomial."""
        poly = self.poly
        top = 1 << self.m
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & top:
                a ^= poly
            b >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        """Product of two elements (log/antilog fast path when available)."""
        if self._exp is None:
            return self.mul_schoolbook(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        """Multiplicative inverse, computed as a**(q-2)."""
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]]
        return self.pow(a, self.q - 2)

    def inv_euclid(self, a: int) -> int:
        """Multiplicative inverse by the extended Euclidean algorithm.

        Independent of pow-based inversion; kept as a cross-check oracle.
        """
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        # Invariants: s*a == r (mod poly), t*a == u (mod poly).
        r, u = self.poly, a
        s, t = 0, 1
        while u != 1:
            shift = r.bit_length() - u.bit_length()
            if shift < 0:
                r, u, s, t = u, r, t, s
                shift = -shift
            r ^= u << shift
            s ^= t << shift
        return poly_mod_gf2(t, self.poly)

    def pow(self, a: int, e: int) -> int:
        """a raised to any integer power (negative exponents via inv)."""
        if e < 0:
            a = self.inv(a)     # raises on a == 0
            e = -e
        if a == 0:
            return 0 if e else 1
        e %= self.q - 1
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def theta(self, a: int) -> int:
        """The automorphism a -> a**(2^(n+1)), done as n+1 squarings."""
        for _ in range(self.n + 1):
            a = self.mul(a, a)
        return a

    # -- enumeration and structure -----------------------------------------

    def elements(self) -> range:
        """All q elements in ascending bit-vector order (0 first)."""
        return range(self.q)

    def nonzero_elements(self) -> range:
        """The multiplicative group, ascending."""
        return range(1, self.q)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        n = self.q - 1
        order = n
        for p in _prime_divisors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    @functools.cached_property
    def primitive_element(self) -> int:
        """The least element generating the multiplicative group."""
        n = self.q - 1
        primes = _prime_divisors(n)
        for g in range(2, self.q):
            if all(self.pow(g, n // p) != 1 for p in primes):
                return g
        raise AssertionError("no primitive element found")  # unreachable

    # -- table construction --------------------------------------------------

    def _build_tables(self) -> None:
        n = self.q - 1
        primes = _prime_divisors(n)

        def order_raw(g: int) -> bool:
            for p in primes:
                t, e = 1, n // p
                b = g
                while e:
                    if e & 1:
                        t = self.mul_schoolbook(t, b)
                    b = self.mul_schoolbook(b, b)
                    e >>= 1
                if t == 1:
                    return False
            return True

        g = next(g for g in range(2, self.q) if order_raw(g))
        exp = [1] * (2 * n)
        log = [0] * self.q
        v = 1
        for i in range(n):
            exp[i] = v
            exp[i + n] = v
            log[v] = i
            v = self.mul_schoolbook(v, g)
        assert v == 1, "generator order mismatch while building tables"
        self._exp, self._log = exp, log

    def np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(MUL, THETA) numpy lookup tables for vectorised bulk work.

        MUL has shape (q, q); THETA has shape (q,).  Built once, read-only
        afterwards.
        """
        if self._np_tables is None:
            if self.m > 12:
                raise ValueError(f"numpy tables unsupported for m={self.m}")
            q = self.q
            mul = np.empty((q, q), dtype=np.int32)
            for a in range(q):
                mul[a] = [self.mul(a, b) for b in range(q)]
            theta = np.array([self.theta(a) for a in range(q)], dtype=np.int32)
            self._np_tables = (mul, theta)
        return self._np_tables
