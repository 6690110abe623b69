"""OneMax: minimize the number of zero genes. Optimum 0 at the all-ones genome."""

from __future__ import annotations

import numpy as np

from ..genome import GeneDomain, Genome
from .base import Problem


class OneMax(Problem):
    def __init__(self, length: int):
        if length < 1:
            raise ValueError("length must be positive")
        self.length = length
        self.name = f"onemax-{length}"
        self._domain = GeneDomain.binary(length)

    def domain(self) -> GeneDomain:
        return self._domain

    def evaluate(self, genes: Genome) -> float:
        genes = self._domain.validate(genes)
        return float(self.length - genes.sum())

    def evaluate_batch(self, genomes: np.ndarray) -> np.ndarray:
        return (self.length - genomes.sum(axis=1)).astype(np.float64)
