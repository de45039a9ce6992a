"""Seeded random inputs for the verification suites."""

from __future__ import annotations

from random import Random

from reflexa.findual import Model, RecursiveFunctional
from reflexa.linalg import Field, Matrix
from reflexa.modules import FinModule, LinearMap
from reflexa.towers import Tower


def random_matrix(field: Field, rng: Random, rows: int, cols: int, bound: int = 5) -> Matrix:
    return Matrix(field, rows, cols, [field.random_element(rng, bound) for _ in range(rows * cols)])


def random_linear_map(field: Field, rng: Random, max_rank: int = 8) -> LinearMap:
    m, n = rng.randint(0, max_rank), rng.randint(0, max_rank)
    return LinearMap(FinModule(field, m), FinModule(field, n), random_matrix(field, rng, n, m))


def random_tower(field: Field, rng: Random, max_depth: int = 5, max_dim: int = 5) -> Tower:
    """Arbitrary maps between random dimensions; usually not surjective."""
    depth = rng.randint(1, max_depth)
    dims = [rng.randint(0, max_dim) for _ in range(depth + 1)]
    maps = [random_matrix(field, rng, dims[n], dims[n + 1], bound=2) for n in range(depth)]
    return Tower.from_dims(field, dims, maps, "random")


def random_functional(field: Field, rng: Random, model: Model, max_degree: int = 4) -> RecursiveFunctional:
    d = rng.randint(1, max_degree)
    ann = tuple(field.random_element(rng, 3) for _ in range(d)) + (field.one,)
    values = tuple(field.random_element(rng, 3) for _ in range(d))
    return RecursiveFunctional(field, model, ann, values)
