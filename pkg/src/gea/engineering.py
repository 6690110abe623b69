"""Gene-engineering operators layered on the baseline GA.

Three mechanisms, each driven by per-locus repetition statistics over the
elite slice of the population:

* dominant-gene extraction: the most repeated symbol per locus, first
  occurrence winning ties (replacement only on strictly greater counts);
* directed mutation: mutation confined to loci the pattern mask leaves
  unmasked (uninformative loci);
* gene injection: overwriting a poor member's masked loci with the dominant
  symbols, with a permutation repair when that would duplicate symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .genome import DomainKind, GeneDomain, Genome
from .population import Individual, Population, survivor_select


@dataclass(frozen=True)
class RepetitionMatrix:
    """Per-locus symbol occurrence counts over an elite of `elite_size` genomes.

    counts[locus, symbol] is dense; symbols beyond the observed range count 0.
    first_seen[locus, symbol] is the first elite row holding that symbol there
    (elite_size when absent) and carries the tie-break order.
    """

    counts: np.ndarray
    first_seen: np.ndarray
    elite_size: int

    def count(self, locus: int, symbol: int) -> int:
        if 0 <= symbol < self.counts.shape[1]:
            return int(self.counts[locus, symbol])
        return 0


@dataclass(frozen=True)
class DominantChromosome:
    genes: np.ndarray
    repeat_counts: np.ndarray


@dataclass(frozen=True)
class PatternMask:
    bits: np.ndarray  # 1 = desired/fixed locus, 0 = open to change
    threshold: int

    @property
    def inverted(self) -> np.ndarray:
        return 1 - self.bits


def repetition_matrix(elite: np.ndarray) -> RepetitionMatrix:
    """Count symbol occurrences per locus over the elite rows."""
    elite = np.asarray(elite, dtype=np.int64)
    if elite.ndim != 2 or elite.shape[0] == 0:
        raise ValueError("elite must be a non-empty (M, L) genome matrix")
    m, length = elite.shape
    n_symbols = int(elite.max()) + 1
    loci = np.broadcast_to(np.arange(length), (m, length))
    rows = np.broadcast_to(np.arange(m)[:, None], (m, length))

    counts = np.zeros((length, n_symbols), dtype=np.int64)
    np.add.at(counts, (loci, elite), 1)
    first_seen = np.full((length, n_symbols), m, dtype=np.int64)
    np.minimum.at(first_seen, (loci, elite), rows)
    return RepetitionMatrix(counts, first_seen, m)


def dominant_chromosome(rm: RepetitionMatrix) -> DominantChromosome:
    """Most repeated symbol per locus; earliest-seen symbol wins count ties."""
    repeat_counts = rm.counts.max(axis=1)
    tie_rank = np.where(rm.counts == repeat_counts[:, None], rm.first_seen, rm.elite_size + 1)
    genes = tie_rank.argmin(axis=1).astype(np.int64)
    return DominantChromosome(genes, repeat_counts)


def build_mask(dc: DominantChromosome, threshold: int) -> PatternMask:
    """Mark loci whose dominant count strictly exceeds the threshold.

    A zero threshold disables masking entirely (all-zero mask).
    """
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    if threshold == 0:
        bits = np.zeros_like(dc.repeat_counts)
    else:
        bits = (dc.repeat_counts > threshold).astype(np.int64)
    return PatternMask(bits, threshold)


def select_scenario(weights: Sequence[float], rng: np.random.Generator) -> int:
    """Categorical draw over the normalized scenario weights; returns 1, 2 or 3."""
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (3,) or (w < 0).any():
        raise ValueError(f"weights must be three non-negative reals, got {weights!r}")
    total = w.sum()
    if total <= 0:
        raise ValueError("scenario weights must not all be zero")
    return int(np.searchsorted(np.cumsum(w / total), rng.random(), side="right")) + 1


# ---------------------------------------------------------------------------
# directed mutation (scenario 2)

def directed_mutation_batch(domain: GeneDomain, genomes: np.ndarray, mask_bits: np.ndarray,
                            rng: np.random.Generator) -> np.ndarray:
    """Mutate only unmasked loci; rows come back unchanged when too few exist."""
    free = np.flatnonzero(np.asarray(mask_bits) == 0)
    m = genomes.shape[0]
    out = genomes.copy()
    if m == 0:
        return out
    rows = np.arange(m)
    if domain.kind is DomainKind.BINARY:
        if free.size == 0:
            return out
        loci = free[rng.integers(0, free.size, size=m)]
        out[rows, loci] ^= 1
        return out
    if free.size < 2:
        return out
    i = rng.integers(0, free.size, size=m)
    j = rng.integers(0, free.size - 1, size=m)
    j = j + (j >= i)
    fi, fj = free[i], free[j]
    out[rows, fi], out[rows, fj] = genomes[rows, fj], genomes[rows, fi]
    return out


def directed_mutation(domain: GeneDomain, g: Genome, mask: PatternMask,
                      rng: np.random.Generator) -> Genome:
    if len(mask.bits) != len(g):
        raise ValueError("mask length must equal genome length")
    return directed_mutation_batch(domain, np.asarray(g, dtype=np.int64)[None, :],
                                   mask.bits, rng)[0]


# ---------------------------------------------------------------------------
# gene injection (scenario 3)

def repair_permutation(fixed: Mapping[int, int], source: Genome) -> Genome:
    """Complete a partial permutation.

    Fixed loci keep their symbols; every other locus is filled left to right
    with the symbols absent from the fixed set, ordered as they appear in
    `source`.
    """
    source = np.asarray(source, dtype=np.int64)
    out = np.empty_like(source)
    if not fixed:
        return source.copy()
    positions = np.fromiter(fixed.keys(), dtype=np.int64)
    values = np.fromiter(fixed.values(), dtype=np.int64)
    if np.unique(values).size != values.size:
        raise ValueError("fixed loci hold duplicate symbols")
    out[positions] = values
    open_loci = np.setdiff1d(np.arange(source.size), positions)
    fill = source[~np.isin(source, values)]
    out[open_loci] = fill
    return out


def gene_injection_batch(domain: GeneDomain, genomes: np.ndarray, mask_bits: np.ndarray,
                         dc_genes: np.ndarray) -> np.ndarray:
    """Overwrite masked loci with dominant symbols across a recipient cohort."""
    mask_on = np.asarray(mask_bits) == 1
    if domain.kind is DomainKind.BINARY:
        return np.where(mask_on[None, :], dc_genes[None, :], genomes)

    fixed_pos, fixed_vals = _distinct_injection(mask_on, dc_genes)
    if fixed_pos.size == 0:
        return genomes.copy()
    m, length = genomes.shape
    is_fixed_symbol = np.zeros(domain.n_symbols, dtype=bool)
    is_fixed_symbol[fixed_vals] = True
    open_loci = np.setdiff1d(np.arange(length), fixed_pos)

    # compact each row's non-fixed symbols, preserving their order
    member = is_fixed_symbol[genomes]
    order = np.argsort(member, axis=1, kind="stable")
    fills = np.take_along_axis(genomes, order, axis=1)[:, : open_loci.size]

    out = np.empty_like(genomes)
    out[:, fixed_pos] = fixed_vals
    out[:, open_loci] = fills
    return out


def gene_injection(domain: GeneDomain, g: Genome, mask: PatternMask,
                   dc: DominantChromosome) -> Genome:
    if len(mask.bits) != len(g) or len(dc.genes) != len(g):
        raise ValueError("mask and dominant chromosome must match the genome length")
    return gene_injection_batch(domain, np.asarray(g, dtype=np.int64)[None, :],
                                mask.bits, dc.genes)[0]


def _distinct_injection(mask_on: np.ndarray, dc_genes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Masked loci to inject, keeping only the first occurrence of each symbol."""
    positions = np.flatnonzero(mask_on)
    values = dc_genes[positions]
    _, first = np.unique(values, return_index=True)
    first.sort()
    return positions[first], values[first]


# ---------------------------------------------------------------------------
# dominant-chromosome candidate (scenario 1)

def dominant_candidate(domain: GeneDomain, dc: DominantChromosome,
                       template: Genome) -> Genome:
    """Dominant genes as a full genome, repaired against `template` when the
    raw dominant vector is not a valid permutation."""
    if domain.kind is DomainKind.BINARY:
        return dc.genes.copy()
    _, first = np.unique(dc.genes, return_index=True)
    if first.size == dc.genes.size:
        return dc.genes.copy()
    first.sort()
    fixed = {int(i): int(dc.genes[i]) for i in first}
    return repair_permutation(fixed, template)


def apply_scenario1(pop: Population, dc: DominantChromosome, problem) -> Population:
    """Submit the dominant chromosome as one extra offspring; size is unchanged."""
    domain = problem.domain()
    genes = dominant_candidate(domain, dc, pop.genes[0])
    cost = float(problem.evaluate_batch(genes[None, :])[0])
    return survivor_select(pop, [Individual(genes, cost)])
