"""Independent brute-force checks certifying the fast engines at desk scale.

Nothing here shares code with the engines it certifies: diagonals are
re-enumerated with a different loop, crossings are re-derived from the
interleaving definition, and closed sets are found by scanning all 2^d
subsets rather than walking the closure lattice.  Budget guards refuse scans
above 2^24 subsets unless NCOTOR_BUDGET (or an explicit argument) raises the
ceiling.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass

from . import kernels
from .closure import (
    Configuration,
    closed_sets,
    frame,
    is_closed,
    non_crossing,
)
from .errors import BudgetExceeded
from .mutation import MutationStep, mutate, rotate_set
from .polygon import DiagSet, PolygonSpec, n_diagonals
from .quiver import subfactor_bijection_check

DEFAULT_BUDGET = 1 << 24
DEFAULT_SEED = 0x5EED


def subset_budget(budget: int | None = None) -> int:
    """Effective subset budget: explicit argument, else NCOTOR_BUDGET, else 2^24."""
    if budget is not None:
        return budget
    raw = os.environ.get("NCOTOR_BUDGET", "")
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run; empty `failures` means it passed."""

    spec: PolygonSpec
    check_name: str
    cases_checked: int
    failures: tuple[str, ...] = ()
    elapsed: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "spec": {"n": self.spec.n, "m": self.spec.m},
                "check": self.check_name,
                "casesChecked": self.cases_checked,
                "failures": list(self.failures),
                "elapsed": round(self.elapsed, 6),
                "seed": self.seed,
                "passed": self.passed,
            },
            indent=2,
        )

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        extra = f", seed={self.seed}" if self.seed is not None else ""
        line = (
            f"[{state}] {self.check_name} on {self.spec}: "
            f"{self.cases_checked} cases in {self.elapsed:.2f}s{extra}"
        )
        if self.failures:
            shown = "\n".join("  - " + f for f in self.failures[:10])
            more = "" if len(self.failures) <= 10 else f"\n  ... {len(self.failures) - 10} more"
            line += f"\n{shown}{more}"
        return line


# --------------------------------------------------------------- primitives
#
# The naive layer below is the oracle's own substrate: its own enumeration
# order (by difference, then by first endpoint), its own crossing test, and
# frozenset-based set algebra.

def naive_diagonals(spec: PolygonSpec) -> list[tuple[int, int]]:
    """All n-diagonals as plain pairs, enumerated by arc difference.

    Every normalized chord (a, b) shows up exactly once, at difference
    b - a; the order (difference-major) deliberately differs from the
    engine's lexicographic ranks.
    """
    N, n = spec.N, spec.n
    out = []
    for diff in range(2, N - 1):
        if diff % n != 1 % n:
            continue
        for a in range(1, N - diff + 1):
            out.append((a, a + diff))
    return out


def naive_crossing(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (a, b), (c, d) = p, q
    return (a < c < b < d) or (c < a < d < b)


def naive_nc(spec: PolygonSpec, members: frozenset) -> frozenset:
    """Non-crossing complement computed directly from the definition."""
    return frozenset(
        u for u in naive_diagonals(spec)
        if not any(naive_crossing(u, v) for v in members)
    )


def naive_is_closed(spec: PolygonSpec, members: frozenset) -> bool:
    return naive_nc(spec, naive_nc(spec, members)) == members


# ------------------------------------------------------------------- checks


def brute_closed_sets(spec: PolygonSpec, budget: int | None = None) -> set[DiagSet]:
    """Every closed set, found by scanning all 2^d subsets.

    Refuses specs whose subset count exceeds the budget.  The scan itself
    runs in the oracle kernel (compiled when available) but shares no code
    with the closure engine: quadratic crossing tests on endpoint arrays,
    no mask tables, no lattice walk.
    """
    pairs = naive_diagonals(spec)
    d = len(pairs)
    limit = subset_budget(budget)
    if 2 ** d > limit:
        raise BudgetExceeded(
            f"{spec} has {d} n-diagonals; 2^{d} subsets exceed the budget {limit}"
        )
    avec = [p[0] for p in pairs]
    bvec = [p[1] for p in pairs]
    fixed = kernels.brute_fixed_points(avec, bvec)
    out = set()
    for bits in fixed:
        members = [pairs[i] for i in range(d) if bits >> i & 1]
        out.add(DiagSet.from_diagonals(spec, members))
    return out


def verify_galois(
    spec: PolygonSpec,
    trials: int = 10_000,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Randomized check of the complement's order properties on one spec.

    Per trial: draw S and a superset T; check antitonicity (nc T <= nc S),
    extensivity (S <= nc nc S), idempotence of the closure, and equality of
    the engine's nc with the oracle's naive nc.  The empty and full sets are
    always included as the first trials.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    d = len(n_diagonals(spec))
    failures: list[str] = []
    cases = 0

    def one_trial(s_bits: int, t_bits: int) -> None:
        nonlocal cases
        cases += 1
        s = DiagSet(spec, s_bits)
        t = DiagSet(spec, t_bits)
        ncs, nct = non_crossing(s), non_crossing(t)
        if not nct.issubset(ncs):
            failures.append(f"antitone violated: S={s.text()} T={t.text()}")
        closure = non_crossing(ncs)
        if not s.issubset(closure):
            failures.append(f"extensive violated at {s.text()}")
        if non_crossing(non_crossing(closure)) != closure:
            failures.append(f"idempotence violated at {s.text()}")
        naive = naive_nc(spec, frozenset(s.pairs()))
        if naive != set(ncs.pairs()):
            failures.append(f"fast nc differs from naive nc at {s.text()}")

    full = (1 << d) - 1
    one_trial(0, 0)
    one_trial(full, full)
    for _ in range(max(0, trials - 2)):
        s_bits = rng.getrandbits(d)
        extra = rng.getrandbits(d)
        one_trial(s_bits, s_bits | extra)

    return VerificationReport(
        spec=spec,
        check_name="galois",
        cases_checked=cases,
        failures=tuple(failures[:50]),
        elapsed=time.perf_counter() - t0,
        seed=seed,
    )


def _frame_subsets(f: DiagSet):
    """All subsets of a frame as DiagSets (frames are small)."""
    members = list(f)
    k = len(members)
    for bits in range(1 << k):
        yield DiagSet.from_diagonals(
            f.spec, (members[i] for i in range(k) if bits >> i & 1)
        )


def verify_mutation_theorem(spec: PolygonSpec, independent: bool = True) -> VerificationReport:
    """Exhaustive check of mutation on every closed set of one spec.

    For every closed S, every cut D inside frame(S), and both directions:
    the rotation of S is closed and its frame is the rotation of frame(S).
    Closedness of the results is re-checked with the oracle's naive
    complement when `independent` is set.
    """
    t0 = time.perf_counter()
    failures: list[str] = []
    cases = 0
    for s in closed_sets(spec):
        config = Configuration(s)
        f = frame(s)
        for cut in _frame_subsets(f):
            for direction in ("backward", "forward"):
                cases += 1
                record = mutate(config, MutationStep(cut=cut, direction=direction))
                after = record.after.members
                ok_closed = (
                    naive_is_closed(spec, frozenset(after.pairs()))
                    if independent
                    else is_closed(after)
                )
                if not ok_closed:
                    failures.append(
                        f"rotation not closed: S={s.text()} D={cut.text()} {direction}"
                    )
                expected_frame = rotate_set(f, cut, direction)
                if frame(after) != expected_frame:
                    failures.append(
                        f"frame not transported: S={s.text()} D={cut.text()} {direction}"
                    )
    return VerificationReport(
        spec=spec,
        check_name="mutation",
        cases_checked=cases,
        failures=tuple(failures[:50]),
        elapsed=time.perf_counter() - t0,
    )


def verify_closed_enumeration(spec: PolygonSpec, budget: int | None = None) -> VerificationReport:
    """Engine enumeration vs oracle scan: same closed sets, no extras, no gaps."""
    t0 = time.perf_counter()
    failures: list[str] = []
    brute = brute_closed_sets(spec, budget=budget)
    walked = list(closed_sets(spec))
    if len(walked) != len(set(walked)):
        failures.append("enumeration repeated a closed set")
    walked_set = set(walked)
    for s in walked_set - brute:
        failures.append(f"engine claims non-closed set is closed: {s.text()}")
    for s in brute - walked_set:
        failures.append(f"engine missed a closed set: {s.text()}")
    return VerificationReport(
        spec=spec,
        check_name="oracle",
        cases_checked=2 ** len(n_diagonals(spec)),
        failures=tuple(failures[:50]),
        elapsed=time.perf_counter() - t0,
    )


def verify_subfactor(spec: PolygonSpec, cut: DiagSet) -> VerificationReport:
    """Wrap the quiver bridge's product-decomposition check as a report."""
    t0 = time.perf_counter()
    sub = subfactor_bijection_check(spec, cut)
    failures = list(sub.mismatches)
    if sub.ambient_count != sub.product:
        failures.append(
            f"count mismatch: {sub.ambient_count} ambient closed sets vs "
            f"product {sub.product} = {'x'.join(map(str, sub.local_counts))}"
        )
    return VerificationReport(
        spec=spec,
        check_name="subfactor",
        cases_checked=sub.ambient_count + sub.product,
        failures=tuple(failures[:50]),
        elapsed=time.perf_counter() - t0,
    )
