"""Genome domains: fixed-length vectors of discrete gene symbols.

Two encodings are supported. Binary genomes hold independent 0/1 genes.
Permutation genomes encode routing-style solutions: symbols 1..n_items must
each appear exactly once, and any extra symbols n_items+1..length act as
route separators that are permuted along with the items.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

Genome = np.ndarray


class DomainKind(Enum):
    BINARY = "binary"
    PERMUTATION = "permutation"


@dataclass(frozen=True)
class GeneDomain:
    kind: DomainKind
    length: int
    n_items: int = 0

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"domain length must be positive, got {self.length}")
        if self.kind is DomainKind.PERMUTATION:
            if not 1 <= self.n_items <= self.length:
                raise ValueError(
                    f"permutation domain needs 1 <= n_items <= length, "
                    f"got n_items={self.n_items}, length={self.length}"
                )

    @classmethod
    def binary(cls, length: int) -> "GeneDomain":
        return cls(DomainKind.BINARY, length)

    @classmethod
    def permutation(cls, n_items: int, separators: int = 0) -> "GeneDomain":
        return cls(DomainKind.PERMUTATION, n_items + separators, n_items)

    @property
    def alphabet(self) -> np.ndarray:
        if self.kind is DomainKind.BINARY:
            return np.array([0, 1])
        return np.arange(1, self.length + 1)

    @property
    def n_symbols(self) -> int:
        """Dense index bound: symbols fit in range(n_symbols)."""
        return 2 if self.kind is DomainKind.BINARY else self.length + 1

    @property
    def n_separators(self) -> int:
        if self.kind is DomainKind.BINARY:
            return 0
        return self.length - self.n_items

    def contains(self, genes: np.ndarray) -> bool:
        genes = np.asarray(genes)
        if genes.shape != (self.length,):
            return False
        if self.kind is DomainKind.BINARY:
            return bool(np.isin(genes, (0, 1)).all())
        return bool(np.array_equal(np.sort(genes), self.alphabet))

    def validate(self, genes) -> Genome:
        """Coerce to an int array and raise ValueError on any domain violation."""
        arr = np.asarray(genes, dtype=np.int64)
        if arr.shape != (self.length,):
            raise ValueError(f"genome shape {arr.shape} does not match length {self.length}")
        if not self.contains(arr):
            raise ValueError(f"genome {arr.tolist()} is not a member of {self.kind.value} domain")
        return arr

    def sample(self, rng: np.random.Generator) -> Genome:
        return self.sample_batch(rng, 1)[0]

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Uniform genomes: fair independent bits, or unbiased per-row shuffles."""
        if self.kind is DomainKind.BINARY:
            return rng.integers(0, 2, size=(size, self.length), dtype=np.int64)
        base = np.tile(np.arange(1, self.length + 1, dtype=np.int64), (size, 1))
        rng.permuted(base, axis=1, out=base)
        return base
