"""0/1 knapsack with a penalized minimization objective and an exact DP oracle.

Feasible genomes cost (total value - selected value), so 0 means everything
fits; overweight genomes cost (total value + excess weight), which is strictly
worse than any feasible genome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..genome import GeneDomain, Genome
from ..rng import make_rng
from .base import Problem

DP_MAX_ITEMS = 30
DP_MAX_CAPACITY = 10_000


@dataclass(frozen=True)
class KnapsackInstance:
    weights: tuple[float, ...]
    values: tuple[float, ...]
    capacity: float

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.values):
            raise ValueError("weights and values must have equal length")
        if not self.weights:
            raise ValueError("instance needs at least one item")
        if min(self.weights) <= 0 or min(self.values) <= 0:
            raise ValueError("weights and values must be positive")
        if self.capacity <= 0:
            raise ValueError("capacity must be positive")

    @property
    def n_items(self) -> int:
        return len(self.weights)


class Knapsack(Problem):
    def __init__(self, instance: KnapsackInstance, name: str | None = None):
        self.instance = instance
        self.name = name or f"knapsack-{instance.n_items}"
        self._domain = GeneDomain.binary(instance.n_items)
        self._weights = np.array(instance.weights, dtype=np.float64)
        self._values = np.array(instance.values, dtype=np.float64)
        self._total_value = float(self._values.sum())

    def domain(self) -> GeneDomain:
        return self._domain

    def evaluate(self, genes: Genome) -> float:
        genes = self._domain.validate(genes)
        return float(self.evaluate_batch(genes[None, :])[0])

    def evaluate_batch(self, genomes: np.ndarray) -> np.ndarray:
        weight = genomes @ self._weights
        value = genomes @ self._values
        overweight = weight - self.instance.capacity
        return np.where(overweight > 0,
                        self._total_value + overweight,
                        self._total_value - value)

    def best_value(self, cost: float) -> float:
        """Selected value corresponding to a feasible cost."""
        return self._total_value - cost


def knapsack_dp_optimum(instance: KnapsackInstance) -> float:
    """Exact maximum value by dynamic programming over integer capacities."""
    weights = instance.weights
    for w in weights:
        if w != int(w):
            raise ValueError(f"dp oracle needs integer weights, got {w}")
    if instance.n_items > DP_MAX_ITEMS:
        raise ValueError(f"dp oracle limited to {DP_MAX_ITEMS} items, got {instance.n_items}")
    capacity = int(math.floor(instance.capacity))
    if capacity > DP_MAX_CAPACITY:
        raise ValueError(f"dp oracle limited to capacity {DP_MAX_CAPACITY}, got {capacity}")

    best = np.zeros(capacity + 1, dtype=np.float64)
    for w, v in zip(weights, instance.values):
        w = int(w)
        if w > capacity:
            continue
        # RHS materializes before the write, so each item is used at most once
        np.maximum(best[w:], best[:-w] + v, out=best[w:])
    return float(best[capacity])


def generate_knapsack_instance(n_items: int, seed: int) -> KnapsackInstance:
    """Seeded instance with integer weights/values; capacity ~55% of total weight."""
    if n_items < 1:
        raise ValueError("n_items must be positive")
    rng = make_rng(seed)
    weights = rng.integers(1, 31, size=n_items)
    values = rng.integers(1, 51, size=n_items)
    capacity = int(math.ceil(0.55 * float(weights.sum())))
    return KnapsackInstance(tuple(float(w) for w in weights),
                            tuple(float(v) for v in values),
                            float(capacity))
