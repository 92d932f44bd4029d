"""Formula-vs-oracle verification sweeps.

Each check compares one closed-form rule family against brute-force
coset oracles over its stated grid and reports every mismatch with the
offending catalog clause.  The grids are the desk-scale ones; the
large-m points that cannot be fully partitioned are covered by seeded
per-element spot checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import cosets, formulas

GRID_M3_Q = (3, 4, 5, 7, 8, 9, 11, 13)
GRID_M5_Q = (3, 4, 5, 7, 8)
GRID_GENERAL = ((3, 7), (3, 9), (4, 7), (5, 7))
GRID_BINARY_M = (3, 5, 7, 9, 11, 13, 15, 17)
GRID_TERNARY_M = (2, 3, 4, 5)
GRID_L22_Q = (2, 3, 4, 5)
GRID_L22_M = (3, 5, 7)
GRID_SPOT_GENERAL = ((3, 11), (3, 13), (4, 11), (5, 9))
GRID_SPOT_BINARY = (19, 21)
SPOT_SAMPLES = 10_000
SPOT_SEED = 20260808

ALL_LEADER_GRID = tuple((q, 3) for q in GRID_M3_Q) + tuple((q, 5) for q in GRID_M5_Q) + GRID_GENERAL


@dataclass
class CheckResult:
    check: str
    point: str
    cases: int
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _oracle_dims(q: int, n: int, deltas: list[int]) -> dict[int, int]:
    """n - |C_1 u ... u C_{delta-1}| for each requested delta, by leader walks."""
    params = cosets.coset_params(q, n)
    want = sorted(set(deltas))
    out = {}
    seen: set[int] = set()
    total = 0
    nxt = 0
    for a in range(1, want[-1]):
        while nxt < len(want) and want[nxt] == a:
            out[want[nxt]] = n - total
            nxt += 1
        v = cosets.is_coset_leader(a, params)
        if v.leader not in seen:
            seen.add(v.leader)
            total += v.size
    for d in want[nxt:]:
        out[d] = n - total
    return out


def _is_leader_formula(q: int, m: int, a: int) -> bool:
    if m == 3:
        return formulas.is_leader_m3(q, a)
    if m == 5:
        return formulas.is_leader_m5(q, a)
    return formulas.is_leader_general(q, m, a)


# ---------------------------------------------------------------------------
# check implementations, one per (check id, grid point)
# ---------------------------------------------------------------------------

def _check_gcd_lemma(_: tuple) -> CheckResult:
    res = CheckResult("lemma2.1", "l<=10,u<=12,v<=12", 0)
    for l in range(2, 11):
        for u in range(0, 13):
            for v in range(1, 13):
                res.cases += 1
                closed = cosets.gcd_power_plus_minus(l, u, v)
                euclid = math.gcd(l ** u + 1, l ** v - 1)
                if closed != euclid:
                    res.mismatches.append(f"l={l} u={u} v={v}: closed {closed} euclid {euclid}")
    return res


def _check_scaling(point: tuple) -> CheckResult:
    q, m = point
    res = CheckResult("lemma2.2", f"q={q} m={m}", 0)
    for N in range(1, q + 2):
        if (q + 1) % N:
            continue
        n_small = (q ** m + 1) // N
        for s in range(1, n_small):
            res.cases += 1
            small_lead, big_lead, small_size, big_size = (
                cosets.scaled_leader_correspondence(s, N, q, m))
            if small_lead != big_lead or small_size != big_size:
                res.mismatches.append(
                    f"N={N} s={s}: small ({small_lead},{small_size}) big ({big_lead},{big_size})")
    return res


def _check_order(point: tuple) -> CheckResult:
    q, m = point
    res = CheckResult("lemma3.1", f"q={q} m={m}", 1)
    n = formulas.family_length(q, m)
    got = cosets.multiplicative_order(q, n)
    if (q, m) == (2, 3):
        if got == 2 * m:
            res.mismatches.append(f"(2,3) should be the exception, got ord {got}")
    elif got != 2 * m:
        res.mismatches.append(f"ord_{n}({q}) = {got}, expected {2 * m}")
    return res


def _check_pair_parity(point: tuple) -> CheckResult:
    (m,) = point
    res = CheckResult("lemma4.1", f"m={m}", 0)
    for s in range(1, 2 ** (m - 1), 2):
        try:
            count = cosets.adjacent_pair_count(s, m)
        except Exception:
            continue  # has a run of three equal bits; out of scope
        res.cases += 1
        if count % 2 == 0:
            res.mismatches.append(f"s={s}: pair count {count} is even")
    return res


def _check_small_range(point: tuple) -> CheckResult:
    q, m = point
    res = CheckResult("lemma3.2", f"q={q} m={m}", 0)
    n = formulas.family_length(q, m)
    params = cosets.coset_params(q, n)
    for a in range(1, q ** ((m - 1) // 2) + 1):
        if a % q == 0:
            continue
        res.cases += 1
        form = formulas.small_range_leader(q, m, a)
        v = cosets.is_coset_leader(a, params)
        oracle = v.is_leader and v.size == 2 * m
        if form != oracle:
            res.mismatches.append(f"a={a}: formula {form}, oracle leader={v.is_leader} size={v.size}")
    return res


def _check_sizes(point: tuple) -> CheckResult:
    q, m = point
    res = CheckResult("prop3.1", f"q={q} m={m}", 0)
    if (q, m) == (2, 3):
        return res
    n = formulas.family_length(q, m)
    params = cosets.coset_params(q, n)
    cap = q * q - q if m == 3 else q ** ((m + 1) // 2)
    for a in range(1, cap + 1):
        if a % q == 0:
            continue
        v = cosets.is_coset_leader(a, params)
        if not v.is_leader:
            continue
        res.cases += 1
        form = formulas.coset_size_rule(q, m, a)
        if form != v.size:
            res.mismatches.append(f"a={a}: rule size {form}, oracle {v.size}")
    return res


def _check_catalog(point: tuple) -> CheckResult:
    q, m = point
    check = {3: "prop3.2", 5: "prop3.3"}.get(m)
    if check is None:
        check = "prop3.4" if ((m - 1) // 2) % 2 == 1 else "prop3.5"
    res = CheckResult(check, f"q={q} m={m}", 0)
    n = formulas.family_length(q, m)
    params = cosets.coset_params(q, n)
    h = (m - 1) // 2
    for a in range(q ** h + 1, (q - 1) * q ** h + 1):
        if a % q == 0:
            continue
        res.cases += 1
        form = _is_leader_formula(q, m, a)
        oracle = cosets.leads(a, params)
        if form != oracle:
            clause = formulas.exception_clause(q, m, a)
            detail = (f"{clause} ({formulas.CLAUSES[clause].description})"
                      if clause else "(no exception clause fired)")
            res.mismatches.append(
                f"a={a}: formula {form} via {detail}, oracle {oracle}")
    return res


def _check_delta1_m3(point: tuple) -> CheckResult:
    (q,) = point
    res = CheckResult("cor3.1", f"q={q}", 1)
    n = formulas.family_length(q, 3)
    params = cosets.coset_params(q, n)
    form = formulas.delta1_m3(q)
    oracle = cosets.largest_coset_leaders(params, 1)[0][0]
    if form != oracle:
        res.mismatches.append(f"formula {form}, downward scan {oracle}")
    return res


def _check_dims(point: tuple) -> CheckResult:
    q, m = point
    check = {3: "thm3.2", 5: "thm3.3"}.get(m, "thm3.4")
    res = CheckResult(check, f"q={q} m={m}", 0)
    if q == 2:
        return res
    n = formulas.family_length(q, m)
    h = (m - 1) // 2
    deltas = [l * q ** h + 1 for l in range(2, q)]
    oracle = _oracle_dims(q, n, deltas)
    for l in range(2, q):
        res.cases += 1
        if m == 3:
            form = formulas.dim_m3(q, l)
            branch = ""
        elif m == 5:
            form = formulas.dim_m5(q, l)
            branch = ""
        else:
            result = formulas.dim_general(q, m, l)
            form = result.dim
            branch = f" (branch {result.branch})"
        want = oracle[l * q ** h + 1]
        if form != want:
            res.mismatches.append(f"l={l}: formula {form}{branch}, oracle {want}")
    return res


def _check_binary_top(point: tuple) -> CheckResult:
    (m,) = point
    res = CheckResult("prop4.x", f"m={m}", 1)
    n = (2 ** m + 1) // 3
    params = cosets.coset_params(2, n)
    first, second = formulas.binary_top_two(m)
    scan = cosets.largest_coset_leaders(params, 2)
    if first != scan[0]:
        res.mismatches.append(f"delta1 formula {first}, scan {scan[0]}")
    if second is not None:
        res.cases += 1
        if second != scan[1]:
            res.mismatches.append(f"delta2 formula {second}, scan {scan[1]}")
    return res


def _check_ternary_cuts(point: tuple) -> CheckResult:
    (m,) = point
    res = CheckResult("thm5.1", f"m={m}", 0)
    n = 3 ** m + 1
    params = cosets.coset_params(3, n)
    d1 = n // 2
    in_t: set[int] = set()
    for delta in range(2, d1 + 1):
        in_t.update(cosets.coset_of(delta - 1, params))
        res.cases += 1
        rep = formulas.ternary_dual_cuts(m, delta)
        i1 = max(t for t in in_t if t < d1)
        i2 = min(t for t in in_t if t > d1)
        if (rep.i1, rep.i2) != (i1, i2):
            res.mismatches.append(f"delta={delta}: cuts ({rep.i1},{rep.i2}), oracle ({i1},{i2})")
        if rep.i2 != n - rep.i1 or rep.bound != rep.i2 - rep.i1:
            res.mismatches.append(f"delta={delta}: report inconsistent")
        if formulas.ternary_dual_bound(m, delta) != rep.bound:
            res.mismatches.append(f"delta={delta}: bound mismatch with cuts")
    return res


def _check_spot_general(point: tuple) -> CheckResult:
    q, m = point
    res = CheckResult("spot-large", f"q={q} m={m}", 0)
    rng = random.Random(SPOT_SEED + q * 100 + m)
    n = formulas.family_length(q, m)
    params = cosets.coset_params(q, n)
    h = (m - 1) // 2
    pool = [a for a in range(q ** h + 1, (q - 1) * q ** h + 1) if a % q]
    sample = pool if len(pool) <= SPOT_SAMPLES else rng.sample(pool, SPOT_SAMPLES)
    for a in sample:
        res.cases += 1
        if formulas.is_leader_general(q, m, a) != cosets.leads(a, params):
            res.mismatches.append(f"a={a}")
    return res


def _check_spot_binary(point: tuple) -> CheckResult:
    (m,) = point
    res = CheckResult("spot-large", f"q=2 m={m}", 0)
    rng = random.Random(SPOT_SEED + m)
    n = (2 ** m + 1) // 3
    params = cosets.coset_params(2, n)
    (d1, s1), second = formulas.binary_top_two(m)
    v1 = cosets.is_coset_leader(d1, params)
    res.cases += 1
    if not (v1.is_leader and v1.size == s1):
        res.mismatches.append(f"delta1={d1}: oracle leader={v1.is_leader} size={v1.size}")
    gap_lo = d1 + 1
    if second is not None:
        d2, s2 = second
        v2 = cosets.is_coset_leader(d2, params)
        res.cases += 1
        if not (v2.is_leader and v2.size == s2):
            res.mismatches.append(f"delta2={d2}: oracle leader={v2.is_leader} size={v2.size}")
        for a in range(d2 + 1, d1):
            res.cases += 1
            if cosets.leads(a, params):
                res.mismatches.append(f"gap value {a} is a leader")
    pool = range(gap_lo, n)
    sample = rng.sample(pool, min(SPOT_SAMPLES, len(pool)))
    for a in sample:
        res.cases += 1
        if cosets.leads(a, params):
            res.mismatches.append(f"a={a} above delta1 is a leader")
    return res


# ---------------------------------------------------------------------------
# registry and driver
# ---------------------------------------------------------------------------

_CHECKS: dict[str, tuple] = {
    "lemma2.1": (_check_gcd_lemma, ((),)),
    "lemma2.2": (_check_scaling, tuple((q, m) for q in GRID_L22_Q for m in GRID_L22_M)),
    "lemma3.1": (_check_order, tuple((q, m) for q in GRID_M3_Q + (2,) for m in (3, 5, 7))),
    "lemma4.1": (_check_pair_parity, tuple((m,) for m in (3, 5, 7, 9, 11, 13))),
    "lemma3.2": (_check_small_range, ALL_LEADER_GRID),
    "prop3.1": (_check_sizes, ALL_LEADER_GRID + ((2, 9),)),
    "prop3.2": (_check_catalog, tuple((q, 3) for q in GRID_M3_Q)),
    "prop3.3": (_check_catalog, tuple((q, 5) for q in GRID_M5_Q)),
    "prop3.4": (_check_catalog, tuple(p for p in GRID_GENERAL if ((p[1] - 1) // 2) % 2 == 1)),
    "prop3.5": (_check_catalog, tuple(p for p in GRID_GENERAL if ((p[1] - 1) // 2) % 2 == 0)),
    "cor3.1": (_check_delta1_m3, tuple((q,) for q in GRID_M3_Q)),
    "thm3.2": (_check_dims, tuple((q, 3) for q in GRID_M3_Q)),
    "thm3.3": (_check_dims, tuple((q, 5) for q in GRID_M5_Q)),
    "thm3.4": (_check_dims, GRID_GENERAL),
    "prop4.x": (_check_binary_top, tuple((m,) for m in GRID_BINARY_M)),
    "thm5.1": (_check_ternary_cuts, tuple((m,) for m in GRID_TERNARY_M)),
    "spot-large": (None, GRID_SPOT_GENERAL + tuple((m,) for m in GRID_SPOT_BINARY)),
}

CHECK_IDS = tuple(_CHECKS)


def _point_qm(check: str, point: tuple) -> tuple[int | None, int | None]:
    """(q, m) of a grid point, for --q/--m filtering."""
    if check == "lemma2.1":
        return None, None
    if check == "cor3.1":
        return point[0], 3
    if check in ("lemma4.1", "prop4.x"):
        return 2, point[0]
    if check == "thm5.1":
        return 3, point[0]
    if check == "spot-large" and len(point) == 1:
        return 2, point[0]
    return point


def _tasks(only=None, qs=None, ms=None) -> list[tuple[str, tuple]]:
    out = []
    for check, (fn, points) in _CHECKS.items():
        if only and check not in only:
            continue
        for point in points:
            q, m = _point_qm(check, point)
            if qs is not None and q is not None and q not in qs:
                continue
            if ms is not None and m is not None and m not in ms:
                continue
            out.append((check, point))
    return out


def run_task(task: tuple[str, tuple]) -> CheckResult:
    check, point = task
    if check == "spot-large":
        fn = _check_spot_general if len(point) == 2 else _check_spot_binary
    else:
        fn = _CHECKS[check][0]
    return fn(point)


def run_verify(only=None, qs=None, ms=None, jobs: int = 1,
               progress=None) -> list[CheckResult]:
    """Run the sweep; results come back in deterministic task order."""
    tasks = _tasks(only, qs, ms)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = []
        for i, task in enumerate(tasks):
            if progress:
                progress(f"[{i + 1}/{len(tasks)}] {task[0]} {task[1]}")
            results.append(run_task(task))
    return results
