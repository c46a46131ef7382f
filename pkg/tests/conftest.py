"""Shared fixtures: small hand-built maps and a seeded random map source."""

import random

import pytest

from gridjam import Cell, GridMap, parse_map

BRANCH_TEXT = "#######\n#.....#\n#.###.#\n#.....#\n#######\n"
CORRIDOR_TEXT = "#######\n#.....#\n#######\n"
OPEN9_TEXT = "\n".join(["." * 9] * 9) + "\n"


@pytest.fixture
def branch_map():
    return parse_map(BRANCH_TEXT)


@pytest.fixture
def corridor_map():
    return parse_map(CORRIDOR_TEXT)


@pytest.fixture
def open9_map():
    return parse_map(OPEN9_TEXT)


def random_grid(rng: random.Random, max_width: int, max_height: int, density=None) -> GridMap:
    width = rng.randint(2, max_width)
    height = rng.randint(2, max_height)
    if density is None:
        density = rng.uniform(0.1, 0.4)
    rows = tuple(
        tuple(rng.random() < density for _ in range(width)) for _ in range(height)
    )
    return GridMap(width, height, 1.0, rows)


def free_cells(grid: GridMap):
    return [
        Cell(col, row)
        for row in range(grid.height)
        for col in range(grid.width)
        if not grid.rows[row][col]
    ]


def random_case(rng: random.Random, max_width: int, max_height: int):
    """A random grid plus two random free cells (regenerates until valid)."""
    while True:
        grid = random_grid(rng, max_width, max_height)
        cells = free_cells(grid)
        if len(cells) >= 2:
            start, goal = rng.sample(cells, 2)
            return grid, start, goal
