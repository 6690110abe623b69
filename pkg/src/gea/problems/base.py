"""Problem contract: a gene domain plus a pure minimization objective."""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from ..genome import GeneDomain, Genome


class Problem(ABC):
    """Minimization problem over a discrete genome domain.

    `evaluate` must be pure, deterministic, and total over all valid genomes.
    """

    name: str = "problem"

    @abstractmethod
    def domain(self) -> GeneDomain:
        ...

    @abstractmethod
    def evaluate(self, genes: Genome) -> float:
        ...

    def evaluate_batch(self, genomes: np.ndarray) -> np.ndarray:
        """Vectorized cost of a (m, L) cohort; overridden by fast subclasses."""
        return np.array([self.evaluate(g) for g in genomes], dtype=np.float64)
