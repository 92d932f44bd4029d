"""Exact arithmetic in GF(p^k) and in polynomial rings over it.

A field element is packed into a single int: the coefficient vector
(c_0, ..., c_{k-1}) over GF(p), little-endian in the modulus root, is
stored as sum(c_i * p^i).  For p = 2 this makes addition a XOR; for
every p it makes the deterministic element ordering ("coefficient
vector read as a base-p integer") plain integer comparison.

The modulus of GF(p^k) is the lexicographically smallest monic
irreducible polynomial of degree k over GF(p), coefficients compared
high-degree-first, so field construction is reproducible across runs.
Prime fields carry an empty modulus marker.

Fields of order up to 2^20 get exp/log tables (multiplication becomes
two lookups); larger fields fall back to direct polynomial
multiplication, which is still fine for the occasional minimal
polynomial at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DegreeZero,
    DivideByZeroPoly,
    DoesNotDivide,
    FieldMismatch,
    FieldTooLarge,
    NotASubfield,
    NotPrime,
)

PRIME_MODULUS_MARKER: tuple[int, ...] = ()
EXTENSION_ORDER_CAP = 1 << 32
TABLE_CAP = 1 << 20


def is_prime(v: int) -> bool:
    """Trial-division primality check, adequate for desk-scale inputs."""
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


def factorize(v: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= v:
        while v % f == 0:
            out[f] = out.get(f, 0) + 1
            v //= f
        f += 1 if f == 2 else 2
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return p, e


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on little-endian int lists, used for modulus selection.
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); b must be nonzero."""
    a = a[:]
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _trim(a)
    return a


def _is_irreducible_p(f: list[int], p: int) -> bool:
    """Trial division against all monic polynomials of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for t in range(p ** d):
            div = [(t // p ** j) % p for j in range(d)] + [1]
            if not _poly_rem_p(f, div, p):
                return False
    return True


def _lex_min_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, high-degree-first lex order."""
    for t in range(p ** k):
        cand = [(t // p ** j) % p for j in range(k)] + [1]
        if _is_irreducible_p(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# Field
# ---------------------------------------------------------------------------

class Field:
    """GF(p^k).  Construct through build_field(); instances are cached."""

    __slots__ = ("p", "k", "order", "modulus", "_mod_int", "_exp", "_log",
                 "_primitive", "_scalars")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.order = p ** k
        self.modulus = modulus
        self._mod_int = sum(b << i for i, b in enumerate(modulus)) if p == 2 else 0
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None
        self._scalars: list[int] | None = None
        if k >= 2 and self.order <= TABLE_CAP:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    # -- coefficient packing -------------------------------------------------

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p ** i) % p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        p = self.p
        v = 0
        for i, c in enumerate(coeffs):
            v += (c % p) * p ** i
        return v

    def elements(self) -> range:
        return range(self.order)

    # -- ring operations ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        v = 0
        mul = 1
        for _ in range(self.k):
            v += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return v

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        v = 0
        mul = 1
        for _ in range(self.k):
            v += ((-a) % p) * mul
            a //= p
            mul *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        e %= self.order - 1
        if self._exp is not None and self.k >= 2:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def scalar(self, s: int) -> int:
        """The prime-subfield element 1 + 1 + ... + 1 (s times)."""
        if self._scalars is None:
            scal = [0]
            for _ in range(self.p - 1):
                scal.append(self.add(scal[-1], 1))
            self._scalars = scal
        return self._scalars[s % self.p]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        if self._log is not None and self.k >= 2:
            g = math.gcd(self._log[a], self.order - 1)
            return (self.order - 1) // g
        t = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            t += 1
        return t

    # -- internals --------------------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            k = self.k
            m = self._mod_int
            while r.bit_length() > k:
                r ^= m << (r.bit_length() - 1 - k)
            return r
        p = self.p
        k = self.k
        ca = self.to_coeffs(a)
        cb = self.to_coeffs(b)
        tmp = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    tmp[i + j] += x * y
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = tmp[i] % p
            if c:
                for j in range(k):
                    tmp[i - k + j] -= c * mod[j]
            tmp[i] = 0
        v = 0
        mul = 1
        for i in range(k):
            v += (tmp[i] % p) * mul
            mul *= p
        return v

    def _find_primitive(self) -> int:
        target = self.order - 1
        if target == 1:
            return 1
        primes = list(factorize(target))
        for cand in range(1, self.order):
            if all(self._slow_pow(cand, target // r) != 1 for r in primes):
                return cand
        raise AssertionError("no primitive element found")  # unreachable

    def _slow_pow(self, a: int, e: int) -> int:
        if self.k == 1:
            return pow(a, e, self.p)
        r = 1
        base = a
        while e:
            if e & 1:
                r = self._slow_mul(r, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        prim = self._find_primitive()
        n1 = self.order - 1
        exp = [0] * n1
        log = [-1] * self.order
        x = 1
        for i in range(n1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, prim)
        assert x == 1
        self._exp = exp
        self._log = log
        self._primitive = prim


@lru_cache(maxsize=None)
def build_field(p: int, k: int) -> Field:
    """GF(p^k) with the deterministic lex-smallest irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if k < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {k}")
    if k >= 2 and p ** k >= EXTENSION_ORDER_CAP:
        raise FieldTooLarge(f"{p}^{k} exceeds the extension construction cap 2^32")
    if k == 1:
        return Field(p, 1, PRIME_MODULUS_MARKER)
    return Field(p, k, _lex_min_irreducible(p, k))


def primitive_element(field: Field) -> int:
    """Smallest element (base-p integer order) of multiplicative order q-1."""
    if field._primitive is None:
        field._primitive = field._find_primitive()
    return field._primitive


def nth_root_of_unity(field: Field, n: int) -> int:
    """A primitive n-th root of unity: alpha^((q-1)/n) for primitive alpha."""
    if n < 1 or (field.order - 1) % n != 0:
        raise DoesNotDivide(f"n={n} does not divide {field.order - 1}")
    return field.pow(primitive_element(field), (field.order - 1) // n)


# ---------------------------------------------------------------------------
# Subfield embedding
# ---------------------------------------------------------------------------

class Embedding:
    """Canonical embedding of GF(q) = GF(p^e) into GF(p^(e*r)).

    The subfield image is {0} together with the order-(q-1) subgroup; the
    small field's modulus root is mapped to its smallest root inside that
    image, which makes both directions table lookups.
    """

    __slots__ = ("small", "big", "fwd", "inv")

    def __init__(self, small: Field, big: Field):
        if small.p != big.p or big.k % small.k != 0:
            raise NotASubfield(f"{small} does not embed in {big}")
        self.small = small
        self.big = big
        if small.k == 1:
            fwd = [big.scalar(s) for s in range(small.p)]
        else:
            root = self._root_of_small_modulus()
            fwd = []
            for a in small.elements():
                img = 0
                x = 1
                for c in small.to_coeffs(a):
                    if c:
                        img = big.add(img, big.mul(big.scalar(c), x))
                    x = big.mul(x, root)
                fwd.append(img)
        self.fwd = tuple(fwd)
        self.inv = {img: a for a, img in enumerate(fwd)}
        assert len(self.inv) == small.order

    def _root_of_small_modulus(self) -> int:
        big = self.big
        q = self.small.order
        step = (big.order - 1) // (q - 1)
        gamma = big.pow(primitive_element(big), step)
        mu = [big.scalar(c) for c in self.small.modulus]
        roots = []
        cand = 1
        for _ in range(q - 1):
            acc = 0
            for c in reversed(mu):
                acc = big.add(big.mul(acc, cand), c)
            if acc == 0:
                roots.append(cand)
            cand = big.mul(cand, gamma)
        assert roots, "small modulus has no root in the big field"
        return min(roots)


@lru_cache(maxsize=None)
def embedding(small: Field, big: Field) -> Embedding:
    return Embedding(small, big)


# ---------------------------------------------------------------------------
# Polynomials over a Field
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients in a Field, little-endian, trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1
    (standing in for "minus infinity": every comparison against a real
    degree behaves correctly).
    """

    field: Field
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: Field, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c)

    def _check(self, other: "Poly") -> None:
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly.make(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, tuple(f.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly.make(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly.make(f, tuple(f.mul(c, x) for x in self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise DivideByZeroPoly("polynomial division by zero")
        f = self.field
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = f.inv(b[-1])
        q = [0] * max(len(a) - db, 0)
        while len(a) - 1 >= db and a:
            if a[-1] == 0:
                a.pop()
                continue
            coef = f.mul(a[-1], inv_lead)
            shift = len(a) - 1 - db
            q[shift] = coef
            for i, bc in enumerate(b):
                a[shift + i] = f.sub(a[shift + i], f.mul(coef, bc))
            while a and a[-1] == 0:
                a.pop()
        return Poly.make(f, q), Poly.make(f, a)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "Poly") -> "Poly":
        g = self.gcd(other)
        if g.is_zero():
            return g
        return (self * other).divmod(g)[0].monic()

    def reciprocal(self) -> "Poly":
        """x^deg * f(1/x): the coefficient vector reversed."""
        return Poly.make(self.field, tuple(reversed(self.coeffs)))

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc


def poly(field: Field, coeffs) -> Poly:
    return Poly.make(field, coeffs)


def x_pow_n_minus_one(field: Field, n: int) -> Poly:
    cs = [field.neg(1)] + [0] * (n - 1) + [1]
    return Poly(field, tuple(cs))


def poly_arith(a: Poly, b: Poly, op: str):
    """Dispatch surface over Poly methods: add, mul, divmod, gcd, lcm."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return a.divmod(b)
    if op == "gcd":
        return a.gcd(b)
    if op == "lcm":
        return a.lcm(b)
    raise ValueError(f"unknown op {op!r}")


def minimal_polynomial(f_big: Field, element: int, f_small_order: int) -> Poly:
    """Monic least-degree polynomial over GF(q) with the element as a root.

    Computed as the product of (x - element^(q^j)) over the Frobenius
    orbit; the coefficients necessarily land in the subfield image and
    are extracted through the canonical embedding.
    """
    p, e = prime_power_split(f_small_order)
    if f_big.p != p:
        raise NotASubfield(f"GF({f_small_order}) does not embed in {f_big}")
    r = 0
    v = 1
    while v < f_big.order:
        v *= f_small_order
        r += 1
    if v != f_big.order:
        raise NotASubfield(f"{f_big} is not an extension of GF({f_small_order})")
    f_small = build_field(p, e)
    emb = embedding(f_small, f_big)

    orbit = [element]
    x = f_big.pow(element, f_small_order)
    while x != element:
        orbit.append(x)
        x = f_big.pow(x, f_small_order)
        assert len(orbit) <= r

    coeffs_big = [1]
    for o in orbit:
        nxt = [0] * (len(coeffs_big) + 1)
        for i, c in enumerate(coeffs_big):
            nxt[i + 1] = f_big.add(nxt[i + 1], c)
            nxt[i] = f_big.sub(nxt[i], f_big.mul(c, o))
        coeffs_big = nxt
    try:
        small_coeffs = [emb.inv[c] for c in coeffs_big]
    except KeyError as exc:  # pragma: no cover - mathematically impossible
        raise AssertionError("orbit product left the subfield") from exc
    return Poly.make(f_small, small_coeffs)
