"""Attack search: candidate enumeration, ledger bookkeeping, oracle parity."""

import math
import random

import pytest

from gridjam import (
    Cell,
    NoBaselineError,
    Outcome,
    apply_obstacle,
    astar,
    attack_oracle,
    brute_force_attack,
    enumerate_candidates,
    parse_map,
)
from conftest import random_case

SQRT2 = math.sqrt(2.0)


def test_enumerate_straight_baseline_side1():
    grid = parse_map(".....")
    baseline = astar(grid, Cell(0, 0), Cell(4, 0))
    candidates = enumerate_candidates(baseline, 1)
    assert [c.center for c in candidates] == [Cell(1, 0), Cell(2, 0), Cell(3, 0)]


def test_enumerate_straight_baseline_side3():
    grid = parse_map("\n".join(["....."] * 3))
    baseline = astar(grid, Cell(0, 1), Cell(4, 1))
    candidates = enumerate_candidates(baseline, 3)
    # only the middle footprint misses both endpoints
    assert [c.center for c in candidates] == [Cell(2, 1)]


def test_enumerate_degenerate_baseline():
    grid = parse_map("..\n..")
    baseline = astar(grid, Cell(0, 0), Cell(0, 0))
    assert enumerate_candidates(baseline, 1) == []


def test_branch_attack_golden(branch_map):
    plan = brute_force_attack(branch_map, Cell(1, 1), Cell(5, 1), 1)
    assert plan.baseline.cost == 4.0
    assert len(plan.ledger) == len(plan.baseline.cells)
    outcomes = [e.outcome for e in plan.ledger]
    assert outcomes == [
        Outcome.INFEASIBLE,
        Outcome.EVALUATED,
        Outcome.EVALUATED,
        Outcome.EVALUATED,
        Outcome.INFEASIBLE,
    ]
    for entry in plan.ledger:
        if entry.outcome is Outcome.EVALUATED:
            assert entry.cost == 8.0
    # earliest index wins the tie between the three equal detours
    assert plan.best.center == Cell(2, 1)
    assert plan.gain == 4.0
    assert plan.attacked_path.cost == 8.0
    assert plan.planning_rounds == 3


def test_corridor_attack_blocked_everywhere(corridor_map):
    plan = brute_force_attack(corridor_map, Cell(1, 1), Cell(5, 1), 1)
    assert plan.best is None
    assert plan.attacked_path is None
    assert plan.gain == 0.0
    blocking = [e for e in plan.ledger if e.outcome is Outcome.BLOCKING]
    assert len(blocking) == 3  # every interior cell seals the corridor


def test_open9_attack_golden(open9_map):
    # golden values derived with the dijkstra-based oracle enumeration
    plan = brute_force_attack(open9_map, Cell(1, 1), Cell(7, 7), 1)
    assert plan.baseline.cost == pytest.approx(6 * SQRT2, abs=1e-12)
    assert plan.best.center == Cell(2, 2)
    assert plan.gain == pytest.approx(4 - 2 * SQRT2, abs=1e-12)
    evaluated = [e for e in plan.ledger if e.outcome is Outcome.EVALUATED]
    assert [e.placement.center for e in evaluated] == [
        Cell(2, 2), Cell(3, 3), Cell(4, 4), Cell(5, 5), Cell(6, 6),
    ]
    for entry in evaluated:
        assert entry.cost == pytest.approx(4 + 4 * SQRT2, abs=1e-12)


def test_oracle_agrees_on_fixtures(branch_map, corridor_map, open9_map):
    for grid, start, goal, side in (
        (branch_map, Cell(1, 1), Cell(5, 1), 1),
        (corridor_map, Cell(1, 1), Cell(5, 1), 1),
        (open9_map, Cell(1, 1), Cell(7, 7), 1),
        (open9_map, Cell(1, 1), Cell(7, 7), 3),
    ):
        mine = brute_force_attack(grid, start, goal, side)
        ref = attack_oracle(grid, start, goal, side)
        assert mine.best == ref.best
        assert mine.gain == ref.gain
        assert [e.outcome for e in mine.ledger] == [e.outcome for e in ref.ledger]


def test_oracle_equivalence_random():
    rng = random.Random(31337)
    sides = (1, 3, 5)
    done = 0
    while done < 30:
        grid, start, goal = random_case(rng, 12, 12)
        side = sides[done % 3]
        try:
            mine = brute_force_attack(grid, start, goal, side)
        except NoBaselineError:
            continue
        ref = attack_oracle(grid, start, goal, side)
        assert mine.best == ref.best
        assert mine.gain == ref.gain
        done += 1


def test_ledger_completeness_and_bounds():
    rng = random.Random(808)
    done = 0
    while done < 25:
        grid, start, goal = random_case(rng, 10, 10)
        try:
            plan = brute_force_attack(grid, start, goal, 3)
        except NoBaselineError:
            continue
        assert len(plan.ledger) == len(plan.baseline.cells)
        assert [e.index for e in plan.ledger] == list(range(len(plan.ledger)))
        for entry in plan.ledger:
            if entry.outcome is Outcome.EVALUATED:
                # blocking a cell can never shorten the route
                assert entry.cost >= plan.baseline.cost - 1e-9
                assert entry.cost <= plan.baseline.cost + plan.gain + 1e-9
        if plan.best is not None:
            assert plan.gain > 1e-9
            assert plan.attacked_path is not None
        else:
            assert plan.gain == 0.0
            assert plan.attacked_path is None
        done += 1


def test_best_placement_keeps_map_solvable():
    rng = random.Random(606)
    found = 0
    while found < 15:
        grid, start, goal = random_case(rng, 12, 12)
        try:
            plan = brute_force_attack(grid, start, goal, 3)
        except NoBaselineError:
            continue
        if plan.best is None:
            continue
        rerouted = astar(apply_obstacle(grid, plan.best), start, goal)
        assert rerouted.cost == plan.attacked_path.cost
        found += 1


def test_attack_requires_baseline():
    grid = parse_map(".#.\n.#.\n.#.")
    with pytest.raises(NoBaselineError):
        brute_force_attack(grid, Cell(0, 0), Cell(2, 0), 1)
    with pytest.raises(NoBaselineError):
        attack_oracle(grid, Cell(0, 0), Cell(2, 0), 1)
