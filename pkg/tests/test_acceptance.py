"""Acceptance gate: every headline guarantee, one reported line each.

Run with plain `pytest` (the verdict lines bypass capture) or on its own:

    pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import contextlib
import time
from pathlib import Path

import pytest

from ncotor.closure import (
    Configuration,
    closed_sets,
    cluster_tilting_sets,
    frame,
    is_closed,
    is_ptolemy,
    nc_closure,
    non_crossing,
)
from ncotor.errors import BudgetExceeded
from ncotor.formats import document_from_set, parse_document, serialize_document
from ncotor.mutation import MutationStep, mutate, rotate_set
from ncotor.oracle import DEFAULT_SEED, brute_closed_sets, verify_galois
from ncotor.polygon import DiagSet, PolygonSpec, n_diagonals
from ncotor.render import render_svg

SWEEP_SPECS = [(1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]

SPEC23 = PolygonSpec(2, 3)
X = DiagSet.from_diagonals(SPEC23, [(1, 4), (1, 6), (3, 6)])
Y = DiagSet.from_diagonals(SPEC23, [(1, 4), (1, 6), (3, 6), (2, 5)])
X2 = DiagSet.from_diagonals(SPEC23, [(1, 4), (1, 6), (1, 8), (7, 10), (6, 9)])
CUT16 = DiagSet.from_diagonals(SPEC23, [(1, 6)])


@pytest.fixture()
def report(capsys):
    @contextlib.contextmanager
    def criterion(name: str):
        ok = True
        try:
            yield
        except BaseException:
            ok = False
            raise
        finally:
            with capsys.disabled():
                print(f"[{'PASS' if ok else 'FAIL'}] {name}")

    return criterion


def timed(limit: float):
    @contextlib.contextmanager
    def guard():
        t0 = time.perf_counter()
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"

    return guard()


class TestGoldenExamples:
    def test_complement_and_closure(self, report):
        with report("golden: complement of the three-chord set and its closure"):
            with timed(1.0):
                want_nc = DiagSet.from_diagonals(
                    SPEC23, [(1, 6), (1, 8), (7, 10), (6, 9)])
                assert non_crossing(X) == want_nc
                assert nc_closure(X) - X == DiagSet.from_diagonals(SPEC23, [(2, 5)])

    def test_closedness_verdicts(self, report):
        with report("golden: closedness verdict for the three- and four-chord sets"):
            with timed(1.0):
                assert is_closed(Y)
                assert not is_closed(X)

    def test_frame_and_backward_rotation(self, report):
        with report("golden: frame of the five-chord set and one backward step"):
            with timed(1.0):
                assert frame(X2) == DiagSet.from_diagonals(SPEC23, [(1, 4), (1, 6)])
                got = rotate_set(X2, CUT16, "backward")
                assert got == DiagSet.from_diagonals(
                    SPEC23, [(2, 5), (1, 6), (6, 9), (1, 8), (7, 10)])


class TestTheoremSweeps:
    def test_mutation_preserves_closedness_and_frame(self, report):
        name = ("theorem: every cut-rotation of every closed set stays closed "
                "with the frame transported (8 specs, both directions)")
        with report(name):
            with timed(60.0):
                cases = 0
                for nm in SWEEP_SPECS:
                    spec = PolygonSpec(*nm)
                    for s in closed_sets(spec):
                        cfg = Configuration(s)
                        f = list(cfg.frame_set)
                        for bits in range(1 << len(f)):
                            cut = DiagSet.from_diagonals(
                                spec, [d for i, d in enumerate(f) if bits >> i & 1])
                            for direction in ("backward", "forward"):
                                rec = mutate(cfg, MutationStep(cut=cut, direction=direction))
                                assert is_closed(rec.after.members)
                                assert rec.after.frame_set == rotate_set(
                                    cfg.frame_set, cut, direction)
                                cases += 1
                assert cases == 9124

    def test_ptolemy_necessity_and_converse(self, report):
        name = ("theorem: closed sets satisfy the connector condition everywhere; "
                "the converse holds for n=1 and fails for the n=2 witness")
        with report(name):
            for nm in SWEEP_SPECS:
                spec = PolygonSpec(*nm)
                for s in closed_sets(spec):
                    assert is_ptolemy(s), f"necessity failed on {s.text()} in {spec}"
            for m in (2, 3, 4):
                spec = PolygonSpec(1, m)
                pool = n_diagonals(spec)
                for bits in range(1 << len(pool)):
                    s = DiagSet.from_diagonals(
                        spec, [d for i, d in enumerate(pool) if bits >> i & 1])
                    assert is_ptolemy(s) == is_closed(s)
            assert is_ptolemy(X) and not is_closed(X)

    def test_subfactor_bijection(self, report):
        from ncotor.quiver import subfactor_bijection_check
        name = ("theorem: cutting the ten-gon along (1,6) matches closed sets "
                "with pairs of closed sets in two hexagons, 25 = 5 x 5")
        with report(name):
            check = subfactor_bijection_check(SPEC23, CUT16)
            assert check.ok
            assert check.ambient_count == 25
            assert check.local_counts == (5, 5)


class TestOracleEquivalence:
    def test_enumeration_agrees_with_brute_force(self, report):
        name = ("oracle: lattice-walk enumeration equals the exhaustive subset scan "
                "on every spec with at most 20 chords; the hexagon-family count is 14")
        with report(name):
            specs = [
                PolygonSpec(n, m)
                for n in range(1, 40) for m in range(1, 40)
                if (n * (m + 1) + 2) * m // 2 <= 20
            ]
            assert len(specs) == 29
            for spec in specs:
                walked = set(closed_sets(spec))
                assert brute_closed_sets(spec) == walked, str(spec)
            assert sum(1 for _ in cluster_tilting_sets(PolygonSpec(1, 3))) == 14

    def test_randomized_galois_suite(self, report):
        name = "oracle: 10,000 random subset pairs satisfy the four complement laws"
        with report(name):
            result = verify_galois(SPEC23, trials=10_000, seed=DEFAULT_SEED)
            assert result.passed, result.summary()
            assert result.cases_checked >= 10_000


class TestFormatAndExitContract:
    def test_document_round_trip(self, report):
        with report("contract: every document survives serialize/parse unchanged"):
            for s in (X, Y, X2, DiagSet.empty(SPEC23), DiagSet.full(SPEC23)):
                doc = document_from_set(s, name="case", notes="gate")
                assert parse_document(serialize_document(doc)) == doc

    def test_rejection_exit_status(self, report):
        import io
        import sys
        from ncotor.cli import EXIT_INPUT, main
        with report("contract: a chord with the wrong residue exits with status 2"):
            bad = '{"version": "1", "spec": {"n": 2, "m": 3}, "diagonals": [[2, 4]]}'
            old = sys.stdin
            sys.stdin = io.StringIO(bad)
            try:
                assert main(["nc", "--in", "-"]) == EXIT_INPUT
            finally:
                sys.stdin = old

    def test_budget_exit_status(self, report):
        from ncotor.cli import EXIT_BUDGET, main
        with report("contract: an oversized exhaustive scan exits with status 3"):
            assert main(["verify", "oracle", "--spec", "2,10", "--budget", "1024"]) == EXIT_BUDGET
            with pytest.raises(BudgetExceeded):
                brute_closed_sets(PolygonSpec(2, 10), budget=1 << 10)

    def test_render_is_byte_stable(self, report):
        with report("contract: the five-chord drawing is byte-identical across runs"):
            golden = Path(__file__).parent / "data" / "five_chords_frame.svg"
            first = render_svg(X2, highlight="frame")
            second = render_svg(X2, highlight="frame")
            assert first == second
            assert first == golden.read_text()
