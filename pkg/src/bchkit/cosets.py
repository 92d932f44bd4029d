"""Cyclotomic-coset arithmetic over Z_n.

This is the oracle layer: every closed form elsewhere in the package is
checked against plain orbit walks and sieves done here.  Everything is
pure integer arithmetic, so it works for any q >= 2 coprime to n, not
just prime powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadDivisor,
    ModulusTooLarge,
    NotCoprime,
    OutOfRange,
    PreconditionViolated,
    TooLargeToMaterialize,
)

PARTITION_CAP = 10 ** 7
MODULUS_CAP = 1 << 63


@dataclass(frozen=True)
class CosetParams:
    """Alphabet size q, length n coprime to q, and ord_n(q)."""

    q: int
    n: int
    ord: int


@dataclass(frozen=True)
class LeaderVerdict:
    a: int
    is_leader: bool
    leader: int
    size: int


@dataclass(frozen=True)
class CosetPartition:
    params: CosetParams
    leaders: tuple[tuple[int, int], ...]  # (leader, coset size), sorted

    def leader_sizes(self) -> dict[int, int]:
        return dict(self.leaders)


def multiplicative_order(q: int, n: int) -> int:
    """Least t >= 1 with q^t = 1 (mod n)."""
    if n < 1 or n >= MODULUS_CAP:
        raise ModulusTooLarge(f"n={n} outside [1, 2^63)")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    t = 1
    x = q % n
    while x != 1:
        x = x * q % n
        t += 1
    return t


def coset_params(q: int, n: int) -> CosetParams:
    return CosetParams(q, n, multiplicative_order(q, n))


def coset_of(a: int, params: CosetParams) -> list[int]:
    """The full orbit {a * q^t mod n}, sorted."""
    n = params.n
    if not 0 <= a < n:
        raise OutOfRange(f"a={a} not in [0, {n})")
    q = params.q
    orbit = [a]
    x = a * q % n
    while x != a:
        orbit.append(x)
        x = x * q % n
    return sorted(orbit)


def is_coset_leader(a: int, params: CosetParams) -> LeaderVerdict:
    """Walk the orbit of a once, tracking minimum and size."""
    n = params.n
    if not 0 <= a < n:
        raise OutOfRange(f"a={a} not in [0, {n})")
    q = params.q
    lead = a
    size = 1
    x = a * q % n
    while x != a:
        if x < lead:
            lead = x
        size += 1
        x = x * q % n
    return LeaderVerdict(a, lead == a, lead, size)


def leads(a: int, params: CosetParams) -> bool:
    """Leader test with early exit; O(1) space, bails at the first smaller orbit member."""
    n = params.n
    q = params.q
    x = a * q % n
    while x != a:
        if x < a:
            return False
        x = x * q % n
    return True


def coset_partition(params: CosetParams) -> CosetPartition:
    """All coset leaders with sizes, found by an ascending sieve."""
    n = params.n
    if n > PARTITION_CAP:
        raise TooLargeToMaterialize(f"n={n} exceeds the materialization cap {PARTITION_CAP}")
    q = params.q
    seen = bytearray(n)
    leaders = []
    for a in range(n):
        if seen[a]:
            continue
        # first unvisited element of a coset is its minimum
        size = 1
        seen[a] = 1
        x = a * q % n
        while x != a:
            seen[x] = 1
            size += 1
            x = x * q % n
        leaders.append((a, size))
    return CosetPartition(params, tuple(leaders))


def largest_coset_leaders(params: CosetParams, count: int) -> list[tuple[int, int]]:
    """The count largest leaders with coset sizes, by downward scan from n-1."""
    if count < 1:
        raise OutOfRange(f"count={count} must be >= 1")
    out: list[tuple[int, int]] = []
    a = params.n - 1
    while len(out) < count and a >= 0:
        if leads(a, params):
            out.append((a, is_coset_leader(a, params).size))
        a -= 1
    return out


def gcd_power_plus_minus(l: int, u: int, v: int) -> int:
    """Closed form of gcd(l^u + 1, l^v - 1), three parity branches."""
    if l < 2 or u < 0 or v < 1:
        raise ValueError("need l >= 2, u >= 0, v >= 1")
    g = math.gcd(u, v)
    if (v // g) % 2 == 1:
        return 1 if l % 2 == 0 else 2
    return l ** g + 1


def scaled_leader_correspondence(s: int, N: int, q: int, m: int) -> tuple[bool, bool, int, int]:
    """Measure leader status of s mod (q^m+1)/N against N*s mod q^m+1.

    Returns (s_is_leader, Ns_is_leader, size_small, size_big).  This
    operation only measures; the equality of the two verdicts and the
    two sizes is asserted by property tests.
    """
    if N < 1 or (q + 1) % N != 0 or (q ** m + 1) % N != 0:
        raise BadDivisor(f"N={N} does not divide q+1={q + 1} (or q^m+1)")
    n_small = (q ** m + 1) // N
    if not 1 <= s < n_small:
        raise OutOfRange(f"s={s} not in [1, {n_small})")
    small = is_coset_leader(s, coset_params(q, n_small))
    big = is_coset_leader(N * s, coset_params(q, q ** m + 1))
    return small.is_leader, big.is_leader, small.size, big.size


def q_adic_expansion(a: int, q: int, width: int) -> tuple[int, ...]:
    """Canonical little-endian digits of a in base q, fixed width."""
    if not 0 <= a < q ** width:
        raise OutOfRange(f"a={a} not in [0, q^width={q ** width})")
    digits = []
    for _ in range(width):
        digits.append(a % q)
        a //= q
    return tuple(digits)


def adjacent_pair_count(s: int, m: int) -> int:
    """Number of maximal runs of length exactly 2 in the width-m binary expansion of s.

    Preconditions: m odd, 0 < s <= 2^(m-1) - 1, s odd, and the expansion
    contains no run of three equal bits.
    """
    if m % 2 == 0:
        raise PreconditionViolated(f"m={m} must be odd")
    if not 0 < s <= 2 ** (m - 1) - 1:
        raise PreconditionViolated(f"s={s} not in (0, 2^(m-1)-1]")
    if s % 2 == 0:
        raise PreconditionViolated(f"s={s} must be odd")
    bits = q_adic_expansion(s, 2, m)
    runs = []
    run = 1
    for i in range(1, m):
        if bits[i] == bits[i - 1]:
            run += 1
        else:
            runs.append(run)
            run = 1
    runs.append(run)
    if any(r >= 3 for r in runs):
        raise PreconditionViolated(f"s={s} has a run of three equal bits")
    return sum(1 for r in runs if r == 2)
