"""Gene-engineering optimization toolkit.

An elitist genetic algorithm extended with dominant-gene extraction, directed
mutation and gene injection, plus exact small-instance oracles and a
reproducible benchmark harness.
"""

from .engineering import (DominantChromosome, PatternMask, RepetitionMatrix,
                          apply_scenario1, build_mask, directed_mutation,
                          dominant_chromosome, gene_injection, repair_permutation,
                          repetition_matrix, select_scenario)
from .genome import DomainKind, GeneDomain
from .harness import (BatchResult, Benchmark, IntervalRow, StatsRow, compute_stats,
                      confidence_interval, full_benchmark, interval_data, run_batch)
from .operators import crossover, mutate
from .population import (Individual, Population, init_population, roulette_select,
                         survivor_select)
from .problems import (Knapsack, KnapsackInstance, OneMax, Problem, VehicleRouting,
                       VrpInstance, generate_instance, generate_knapsack_instance,
                       knapsack_dp_optimum, load_instance, standard_suite,
                       vrp_brute_force, vrp_decode, write_instance)
from .rng import derive_run_seed, make_rng, split_streams
from .solver import VARIANTS, GeaSolver
from .validation import NotFittedError

__version__ = "0.1.0"

__all__ = [
    "DomainKind", "GeneDomain", "Individual", "Population",
    "init_population", "roulette_select", "survivor_select", "crossover", "mutate",
    "RepetitionMatrix", "DominantChromosome", "PatternMask",
    "repetition_matrix", "dominant_chromosome", "build_mask", "directed_mutation",
    "gene_injection", "repair_permutation", "apply_scenario1", "select_scenario",
    "GeaSolver", "VARIANTS", "NotFittedError",
    "Problem", "OneMax", "Knapsack", "KnapsackInstance", "VehicleRouting",
    "VrpInstance", "generate_instance", "generate_knapsack_instance",
    "knapsack_dp_optimum", "load_instance", "standard_suite", "vrp_brute_force",
    "vrp_decode", "write_instance",
    "StatsRow", "IntervalRow", "BatchResult", "Benchmark", "compute_stats",
    "confidence_interval", "interval_data", "run_batch", "full_benchmark",
    "make_rng", "split_streams", "derive_run_seed",
    "__version__",
]
