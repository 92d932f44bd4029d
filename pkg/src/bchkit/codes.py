"""BCH code construction, duals, LCD certification and exact distances.

Distance search enumerates message * generator products.  Three kernels
share that contract: a reference walk in reflected-Gray order that
updates one coefficient per step, a bit-packed kernel for binary codes
of length <= 63, and a split-message-space kernel (numpy, mod-q or
lookup-table symbol arithmetic) that partitions the message space into
two halves and combines by minimum, exactly as a worker partition
would.  All three return identical results; tests assert it.

Every distance result carries provenance, because exact values and
lower bounds must never be conflated downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cosets, gf
from .errors import (
    BudgetExceeded,
    FieldTooLarge,
    NotCoprime,
    NotNegationClosed,
    OutOfRange,
    TooLargeToMaterialize,
    WrongLengthFamily,
)

DEFAULT_BUDGET = 1 << 28
ELEMENT_CAP = 10 ** 6
_GRAY_CAP = 1 << 12
_CHUNK_ELEMS = 1 << 22


@dataclass(frozen=True)
class BchSpec:
    """Design parameters (q, n, delta, b); b=1 narrow sense, b=0 even-like."""

    q: int
    n: int
    delta: int
    b: int = 1

    def __post_init__(self):
        if math.gcd(self.q, self.n) != 1:
            raise NotCoprime(f"gcd(q={self.q}, n={self.n}) != 1")
        if not 2 <= self.delta <= self.n:
            raise OutOfRange(f"delta={self.delta} not in [2, n={self.n}]")


@dataclass(frozen=True)
class DefiningSet:
    q: int
    n: int
    leaders: tuple[tuple[int, int], ...]  # (coset leader, coset size), sorted
    total_size: int
    elements: frozenset[int] | None  # materialized when n is small

    def signature(self) -> tuple[tuple[int, int], ...]:
        return self.leaders

    def materialized(self) -> frozenset[int]:
        if self.elements is not None:
            return self.elements
        params = cosets.coset_params(self.q, self.n)
        if self.total_size > ELEMENT_CAP:
            raise TooLargeToMaterialize(f"|T|={self.total_size} exceeds {ELEMENT_CAP}")
        out: set[int] = set()
        for leader, _ in self.leaders:
            out.update(cosets.coset_of(leader, params))
        return frozenset(out)


@dataclass(frozen=True)
class Distance:
    """Either an exact distance (lo == hi) or bounds, plus how it was obtained."""

    lo: int
    hi: int | None
    provenance: str

    @property
    def exact(self) -> bool:
        return self.hi == self.lo

    def render(self) -> str:
        if self.exact:
            return str(self.lo)
        if self.hi is None:
            return f">={self.lo}"
        return f"[{self.lo},{self.hi}]"


@dataclass
class BchCode:
    spec: BchSpec
    defining_set: DefiningSet
    dim: int
    field: gf.Field | None  # GF(q), present when the generator is constructible
    gen_poly: gf.Poly | None
    distance: Distance | None = None


@dataclass(frozen=True)
class LcdReport:
    lcd: bool                  # gcd(g, reciprocal of h) == 1
    gcd_degree: int
    shortcut_applicable: bool  # -1 is a power of q modulo n


@dataclass(frozen=True)
class EvenLikeClaim:
    dim: int
    distance: Distance  # exact 2*delta when delta | n, else a lower bound


# ---------------------------------------------------------------------------
# Defining sets and dimensions
# ---------------------------------------------------------------------------

def _leaders_from_elements(q: int, n: int, elems) -> DefiningSet:
    params = cosets.coset_params(q, n)
    found: dict[int, int] = {}
    for e in elems:
        v = cosets.is_coset_leader(e % n, params)
        found.setdefault(v.leader, v.size)
    leaders = tuple(sorted(found.items()))
    total = sum(s for _, s in found.items())
    materialized: frozenset[int] | None = None
    if n <= ELEMENT_CAP:
        full: set[int] = set()
        for leader, _ in leaders:
            full.update(cosets.coset_of(leader, params))
        materialized = frozenset(full)
        assert len(materialized) == total
    return DefiningSet(q, n, leaders, total, materialized)


def defining_set(spec: BchSpec) -> DefiningSet:
    """T = C_b + C_{b+1} + ... + C_{b+delta-2}, deduplicated by coset leader."""
    return _leaders_from_elements(
        spec.q, spec.n, (i % spec.n for i in range(spec.b, spec.b + spec.delta - 1)))


def bch_dimension(spec: BchSpec) -> int:
    return spec.n - defining_set(spec).total_size


def dual_defining_set(ds: DefiningSet) -> DefiningSet:
    """Complement defining set Z_n minus T; requires -T == T."""
    elems = ds.materialized()
    n = ds.n
    if any((n - e) % n not in elems for e in elems):
        raise NotNegationClosed(f"-T != T modulo {n}")
    return _leaders_from_elements(ds.q, n, (a for a in range(n) if a not in elems))


def bch_bound(ds: DefiningSet) -> int:
    """Longest cyclic run of consecutive residues inside T, plus one."""
    elems = ds.materialized()
    n = ds.n
    if len(elems) >= n:
        raise OutOfRange("defining set is all of Z_n; the code is trivial")
    if not elems:
        return 1
    srt = sorted(elems)
    best = run = 1
    for i in range(1, len(srt)):
        run = run + 1 if srt[i] == srt[i - 1] + 1 else 1
        best = max(best, run)
    if srt[0] == 0 and srt[-1] == n - 1:
        # wrap: suffix run through n-1 joined to prefix run from 0
        suf = 1
        while srt[-1 - suf] == srt[-1] - suf:
            suf += 1
        pre = 1
        while srt[pre] == pre:
            pre += 1
        best = max(best, suf + pre)
    return best + 1


# ---------------------------------------------------------------------------
# Generator polynomials
# ---------------------------------------------------------------------------

def bch_field(q: int, n: int) -> gf.Field:
    """GF(q^r) for r = ord_n(q), the splitting field of x^n - 1 over GF(q)."""
    p, e = gf.prime_power_split(q)
    r = cosets.multiplicative_order(q, n)
    if q ** r >= gf.EXTENSION_ORDER_CAP:
        raise FieldTooLarge(f"q^r = {q}^{r} exceeds 2^32; analysis continues without polynomials")
    return gf.build_field(p, e * r)


def generator_polynomial(spec: BchSpec, f_big: gf.Field) -> gf.Poly:
    """Product of the minimal polynomials of beta^i over GF(q), i ranging over T's leaders."""
    q, n = spec.q, spec.n
    r = cosets.multiplicative_order(q, n)
    if f_big.order != q ** r:
        raise FieldTooLarge(f"{f_big} has order {f_big.order}, expected q^r = {q ** r}")
    beta = gf.nth_root_of_unity(f_big, n)
    ds = defining_set(spec)
    p, e = gf.prime_power_split(q)
    f_small = gf.build_field(p, e)
    g = gf.poly(f_small, [1])
    for leader, _ in ds.leaders:
        g = g * gf.minimal_polynomial(f_big, f_big.pow(beta, leader), q)
    assert g.degree == ds.total_size and g.is_monic()
    return g


def bch_code(spec: BchSpec, want_poly: bool = True) -> BchCode:
    """Construct the code; generator omitted when the splitting field is too large."""
    ds = defining_set(spec)
    dim = spec.n - ds.total_size
    field = None
    g = None
    if want_poly:
        try:
            f_big = bch_field(spec.q, spec.n)
        except FieldTooLarge:
            f_big = None
        if f_big is not None:
            g = generator_polynomial(spec, f_big)
            field = g.field
    return BchCode(spec, ds, dim, field, g)


# ---------------------------------------------------------------------------
# Distance enumeration kernels
# ---------------------------------------------------------------------------

def _generator_rows(g: gf.Poly, n: int, k: int) -> list[list[int]]:
    base = list(g.coeffs) + [0] * (n - 1 - g.degree)
    return [[0] * i + base[: n - i] for i in range(k)]


def _gray_steps(q: int, k: int):
    """Reflected mixed-radix Gray walk: yields (digit index, +1 or -1)."""
    d = [0] * k
    f = [1] * k
    while True:
        j = 0
        while j < k:
            nd = d[j] + f[j]
            if 0 <= nd < q:
                d[j] = nd
                yield j, f[j]
                break
            f[j] = -f[j]
            j += 1
        else:
            return


def _min_weight_gray(rows: list[list[int]], q: int, n: int, field: gf.Field,
                     histogram: bool = False):
    """Reference enumerator: one row add or subtract per visited message."""
    k = len(rows)
    neg_rows = [[field.neg(c) for c in row] for row in rows]
    cw = [0] * n
    hist = [0] * (n + 1)
    hist[0] = 1
    best = n + 1
    add = field.add
    for j, sign in _gray_steps(q, k):
        row = rows[j] if sign > 0 else neg_rows[j]
        for i in range(n):
            if row[i]:
                cw[i] = add(cw[i], row[i])
        w = n - cw.count(0)
        if histogram:
            hist[w] += 1
        elif w < best:
            best = w
    if histogram:
        return hist
    return best


def _span_bits(row_ints: list[int]) -> np.ndarray:
    k = len(row_ints)
    out = np.empty(1 << k, dtype=np.uint64)
    x = 0
    out[0] = 0
    for i in range(1, 1 << k):
        x ^= row_ints[(i & -i).bit_length() - 1]
        out[i] = x
    return out


def _min_weight_bits(rows: list[list[int]], n: int, histogram: bool = False):
    """Binary codes, n <= 63: codewords as machine words, split message space."""
    row_ints = [sum(b << i for i, b in enumerate(row)) for row in rows]
    k = len(row_ints)
    k1 = k // 2
    span_a = _span_bits(row_ints[:k1])
    span_b = _span_bits(row_ints[k1:])
    chunk = max(1, _CHUNK_ELEMS // len(span_b))
    best = n + 1
    hist = np.zeros(n + 1, dtype=np.int64)
    for lo in range(0, len(span_a), chunk):
        block = span_a[lo: lo + chunk, None] ^ span_b[None, :]
        w = np.bitwise_count(block).astype(np.int64)
        if lo == 0 and not histogram:
            w[0, 0] = n + 1  # the zero codeword is the (0, 0) message pair
        if histogram:
            hist += np.bincount(w.ravel(), minlength=n + 1)[: n + 1]
        else:
            best = min(best, int(w.min()))
    if histogram:
        return [int(v) for v in hist]
    return best


@lru_cache(maxsize=None)
def _symbol_tables(field: gf.Field) -> tuple[np.ndarray, np.ndarray]:
    q = field.order
    add = np.empty((q, q), dtype=np.int16)
    mul = np.empty((q, q), dtype=np.int16)
    for a in range(q):
        for b in range(q):
            add[a, b] = field.add(a, b)
            mul[a, b] = field.mul(a, b)
    return add, mul


def _span_symbols(rows: np.ndarray, field: gf.Field, n: int) -> np.ndarray:
    add_t, mul_t = _symbol_tables(field)
    span = np.zeros((1, n), dtype=np.int16)
    for row in rows:
        scaled = mul_t[:, row]  # (q, n): c * row for every scalar c
        span = add_t[span[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return span


def _min_weight_symbols(rows: list[list[int]], q: int, n: int, field: gf.Field,
                        histogram: bool = False):
    """General q: symbol arithmetic through lookup tables, split message space."""
    add_t, _ = _symbol_tables(field)
    k = len(rows)
    k1 = k // 2
    mat = np.array(rows, dtype=np.int16).reshape(k, n)
    span_a = _span_symbols(mat[:k1], field, n)
    span_b = _span_symbols(mat[k1:], field, n)
    chunk = max(1, _CHUNK_ELEMS // (len(span_b) * max(n, 1)))
    best = n + 1
    hist = np.zeros(n + 1, dtype=np.int64)
    for lo in range(0, len(span_a), chunk):
        block = add_t[span_a[lo: lo + chunk, None, :], span_b[None, :, :]]
        w = np.count_nonzero(block, axis=2)
        if lo == 0 and not histogram:
            w[0, 0] = n + 1
        if histogram:
            hist += np.bincount(w.ravel(), minlength=n + 1)[: n + 1]
        else:
            best = min(best, int(w.min()))
    if histogram:
        return [int(v) for v in hist]
    return best


def _enumerate(code: BchCode, histogram: bool = False):
    g = code.gen_poly
    field = code.field
    q, n, k = code.spec.q, code.spec.n, code.dim
    rows = _generator_rows(g, n, k)
    if q ** k <= _GRAY_CAP:
        return _min_weight_gray(rows, q, n, field, histogram)
    if q == 2 and n <= 63:
        return _min_weight_bits(rows, n, histogram)
    return _min_weight_symbols(rows, q, n, field, histogram)


def _low_weight_upper(code: BchCode, wmax: int = 3) -> int:
    """Upper bound from messages of Hamming weight <= wmax."""
    from itertools import combinations, product

    g = code.gen_poly
    field = code.field
    n, k = code.spec.n, code.dim
    rows = _generator_rows(g, n, k)
    nonzero = range(1, field.order)
    add = field.add
    best = n
    for w in range(1, min(wmax, k) + 1):
        for positions in combinations(range(k), w):
            for coefs in product(nonzero, repeat=w):
                cw = [0] * n
                for pos, c in zip(positions, coefs):
                    row = rows[pos]
                    for i in range(n):
                        if row[i]:
                            cw[i] = add(cw[i], field.mul(c, row[i]))
                best = min(best, n - cw.count(0))
    return best


def min_distance_exact(code: BchCode, budget: int = DEFAULT_BUDGET) -> Distance:
    """Exact minimum weight by full enumeration, or bounds when over budget.

    Full mode needs q^dim <= budget.  Limited mode pairs the defining-set
    run bound with an upper bound from low-weight messages and returns
    exact only when the two meet.
    """
    if code.gen_poly is None:
        lower = bch_bound(code.defining_set)
        code.distance = Distance(lower, None, "defining-set-only")
        return code.distance
    k = code.dim
    if k == 0:
        raise OutOfRange("zero-dimensional code has no minimum distance")
    q = code.spec.q
    lower = bch_bound(code.defining_set)
    if q ** k > budget:
        upper = _low_weight_upper(code)
        prov = "bounds-met" if upper == lower else "bch-bound+low-weight-search"
        code.distance = Distance(lower, upper, prov)
        return code.distance
    d = int(_enumerate(code))
    assert d >= lower, f"enumerated {d} below the run bound {lower}"
    code.distance = Distance(d, d, "enumerated")
    return code.distance


def weight_distribution(code: BchCode, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Full weight distribution A_0..A_n by enumeration; q^dim must fit the budget."""
    if code.gen_poly is None or code.spec.q ** code.dim > budget:
        raise BudgetExceeded(f"q^k = {code.spec.q}^{code.dim} exceeds budget {budget}")
    return _enumerate(code, histogram=True)


def macwilliams_transform(weights: list[int], n: int, q: int, k: int) -> list[int]:
    """Dual weight distribution via the Krawtchouk expansion; exact integers."""
    total = q ** k
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(weights):
            if a == 0:
                continue
            kraw = 0
            for s in range(0, j + 1):
                kraw += (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
            acc += a * kraw
        num, rem = divmod(acc, total)
        assert rem == 0 and num >= 0, "MacWilliams transform left the integers"
        out.append(num)
    assert out[0] == 1 and sum(out) == q ** (n - k)
    return out


def _code_from_defining_set(q: int, n: int, ds: DefiningSet) -> BchCode:
    """Cyclic code with an arbitrary coset-closed defining set (used for duals)."""
    r = cosets.multiplicative_order(q, n)
    if q ** r >= gf.EXTENSION_ORDER_CAP:
        raise FieldTooLarge(f"q^r = {q}^{r} exceeds 2^32")
    f_big = bch_field(q, n)
    beta = gf.nth_root_of_unity(f_big, n)
    p, e = gf.prime_power_split(q)
    f_small = gf.build_field(p, e)
    g = gf.poly(f_small, [1])
    for leader, _ in ds.leaders:
        g = g * gf.minimal_polynomial(f_big, f_big.pow(beta, leader), q)
    dummy = BchSpec(q, n, 2, 0)  # carrier for (q, n); delta/b unused downstream
    return BchCode(dummy, ds, n - ds.total_size, f_small, g)


def dual_min_distance(spec: BchSpec, budget: int = DEFAULT_BUDGET) -> Distance:
    """Minimum distance of the dual code (defining set Z_n minus T).

    Direct enumeration of the dual when its dimension fits the budget;
    otherwise, when the primal is small, the dual distribution is read
    off the primal one through the MacWilliams transform.  Failing both,
    bounds are returned.
    """
    ds = defining_set(spec)
    dds = dual_defining_set(ds)
    q, n = spec.q, spec.n
    dual_dim = ds.total_size
    lower = bch_bound(dds) if dds.total_size < n else 1
    primal_dim = n - dual_dim
    try:
        if q ** dual_dim <= budget:
            dual_code = _code_from_defining_set(q, n, dds)
            d = int(_enumerate(dual_code))
            assert d >= lower
            return Distance(d, d, "enumerated")
        if q ** primal_dim <= budget and primal_dim > 0:
            primal = _code_from_defining_set(q, n, ds)
            dist = macwilliams_transform(_enumerate(primal, histogram=True), n, q, primal_dim)
            d = next(j for j in range(1, n + 1) if dist[j])
            assert d >= lower
            return Distance(d, d, "macwilliams")
    except FieldTooLarge:
        pass
    return Distance(lower, n - dual_dim + 1, "bch-bound+singleton")


def is_lcd(spec: BchSpec, f_big: gf.Field | None = None) -> LcdReport:
    """LCD verdict: gcd(g, reciprocal of h) trivial, with the -1-power shortcut.

    The shortcut (-1 a power of q mod n) is sufficient, not necessary;
    when it does not hold the gcd criterion still decides.
    """
    if f_big is None:
        f_big = bch_field(spec.q, spec.n)
    g = generator_polynomial(spec, f_big)
    x_n_1 = gf.x_pow_n_minus_one(g.field, spec.n)
    h, rem = x_n_1.divmod(g)
    assert rem.is_zero()
    hrev = h.reciprocal().monic()
    gcd_gh = g.gcd(hrev)
    params = cosets.coset_params(spec.q, spec.n)
    minus_one = (spec.n - 1) % spec.n
    shortcut = any(pow(spec.q, t, spec.n) == minus_one for t in range(1, params.ord + 1))
    return LcdReport(gcd_gh.degree == 0, gcd_gh.degree, shortcut)


def even_like_params(q: int, n: int, delta: int) -> EvenLikeClaim:
    """Dimension and distance claim for the even-like subcode, offset 0.

    Only the lengths n dividing some q^m + 1 qualify; there the distance
    is at least 2*delta, exactly 2*delta when delta divides n.
    """
    ordq = cosets.multiplicative_order(q, n)
    if not any(pow(q, t, n) == (n - 1) % n for t in range(1, ordq + 1)):
        raise WrongLengthFamily(f"n={n} does not divide any q^m + 1")
    dim = bch_dimension(BchSpec(q, n, delta + 1, 0))
    if n % delta == 0:
        dist = Distance(2 * delta, 2 * delta, "even-like-delta-divides")
    else:
        dist = Distance(2 * delta, None, "even-like-bound")
    return EvenLikeClaim(dim, dist)
