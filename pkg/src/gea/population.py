"""Evaluated individuals, cost-sorted populations, and selection primitives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .genome import Genome


@dataclass(frozen=True)
class Individual:
    genes: Genome
    cost: float


class Population:
    """Fixed-capacity pool of evaluated genomes, kept sorted by ascending cost.

    Backed by a (size, L) gene matrix plus a cost vector so whole-cohort
    operations stay vectorized; `members()` materializes Individuals on demand.
    """

    __slots__ = ("genes", "costs", "capacity")

    def __init__(self, genes: np.ndarray, costs: np.ndarray,
                 capacity: int | None = None, presorted: bool = False):
        genes = np.asarray(genes, dtype=np.int64)
        costs = np.asarray(costs, dtype=np.float64)
        if genes.ndim != 2 or genes.shape[0] != costs.shape[0]:
            raise ValueError("genes must be (size, L) aligned with costs")
        if genes.shape[0] == 0:
            raise ValueError("population cannot be empty")
        if not np.isfinite(costs).all():
            raise ValueError("all costs must be finite")
        if not presorted:
            order = np.argsort(costs, kind="stable")
            genes, costs = genes[order], costs[order]
        self.genes = genes
        self.costs = costs
        self.capacity = genes.shape[0] if capacity is None else capacity

    def __len__(self) -> int:
        return self.genes.shape[0]

    def __getitem__(self, i: int) -> Individual:
        return Individual(self.genes[i].copy(), float(self.costs[i]))

    def __iter__(self) -> Iterator[Individual]:
        return (self[i] for i in range(len(self)))

    def members(self) -> list[Individual]:
        return list(self)

    @property
    def best(self) -> Individual:
        return self[0]

    @property
    def best_cost(self) -> float:
        return float(self.costs[0])

    def select_survivors(self, offspring_genes: np.ndarray,
                         offspring_costs: np.ndarray) -> "Population":
        """Elitist truncation of parents + offspring back to capacity.

        The stable sort with parents listed first realizes the tie-break:
        incumbents beat equal-cost offspring, earlier insertions beat later.
        Duplicate genomes are suppressed while distinct ones are available,
        so selection pressure cannot collapse the pool into copies of one
        solution; duplicates fill the remainder only in tiny domains.
        """
        if offspring_genes.shape[0] == 0:
            return self
        genes = np.concatenate([self.genes, offspring_genes])
        costs = np.concatenate([self.costs, np.asarray(offspring_costs, dtype=np.float64)])
        order = np.argsort(costs, kind="stable")
        genes, costs = genes[order], costs[order]

        # row-wise first occurrences via a byte view (cheaper than unique(axis=0))
        rows = np.ascontiguousarray(genes).view(
            np.dtype((np.void, genes.dtype.itemsize * genes.shape[1]))).ravel()
        first_seen = np.unique(rows, return_index=True)[1]
        if first_seen.size >= self.capacity:
            keep = np.sort(first_seen)[: self.capacity]
        else:
            is_first = np.zeros(genes.shape[0], dtype=bool)
            is_first[first_seen] = True
            duplicates = np.flatnonzero(~is_first)[: self.capacity - first_seen.size]
            keep = np.sort(np.concatenate([np.flatnonzero(is_first), duplicates]))
        return Population(genes[keep], costs[keep], capacity=self.capacity, presorted=True)


def init_population(problem, size: int, rng: np.random.Generator) -> Population:
    """Uniform random population, evaluated and sorted."""
    if size < 2:
        raise ValueError(f"population size must be >= 2, got {size}")
    genes = problem.domain().sample_batch(rng, size)
    costs = problem.evaluate_batch(genes)
    return Population(genes, costs, capacity=size)


def survivor_select(parents: Population, offspring: Sequence[Individual]) -> Population:
    if not offspring:
        return parents
    genes = np.stack([np.asarray(ind.genes, dtype=np.int64) for ind in offspring])
    costs = np.array([ind.cost for ind in offspring], dtype=np.float64)
    return parents.select_survivors(genes, costs)


def rank_weight_cumsum(size: int) -> np.ndarray:
    """Cumulative rank weights (best rank weighs `size`, worst weighs 1)."""
    return np.cumsum(np.arange(size, 0, -1, dtype=np.float64))


def roulette_indices(size: int, draws: int, rng: np.random.Generator,
                     cumulative: np.ndarray | None = None) -> np.ndarray:
    """Rank-proportional member indices for a sorted population of `size`."""
    if size < 1:
        raise ValueError("cannot select from an empty population")
    if cumulative is None:
        cumulative = rank_weight_cumsum(size)
    points = rng.random(draws) * cumulative[-1]
    return np.searchsorted(cumulative, points, side="right")


def roulette_select(pop: Population, rng: np.random.Generator) -> int:
    """Rank-based roulette wheel: P(index i) = (size - i) / sum of weights."""
    return int(roulette_indices(len(pop), 1, rng)[0])
