"""Fixed-fleet Euclidean vehicle routing on a giant-tour genome.

A solution is one permutation of the customer symbols 1..n plus K-1 separator
symbols n+1..n+K-1. Separators split the sequence into K consecutive (possibly
empty) segments; vehicle k drives depot -> segment k -> depot. The objective
is total Euclidean distance; empty segments cost nothing. The fleet is
uncapacitated, so feasibility never constrains the search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..genome import GeneDomain, Genome
from ..rng import make_rng
from .base import Problem

BRUTE_FORCE_MAX_CUSTOMERS = 8

# (name, customers, vehicles, seed) of the standard benchmark suite
SUITE_DIMENSIONS = (
    ("f1", 8, 3, 1),
    ("f2", 10, 3, 2),
    ("f3", 14, 4, 3),
    ("f4", 20, 4, 4),
    ("f5", 25, 5, 5),
    ("f6", 30, 5, 6),
)


@dataclass(frozen=True)
class VrpInstance:
    name: str
    n_vehicles: int
    depot: tuple[float, float]
    customers: tuple[tuple[float, float], ...]
    distances: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.customers:
            raise ValueError("instance needs at least one customer")
        if not 1 <= self.n_vehicles <= len(self.customers):
            raise ValueError(
                f"need 1 <= vehicles <= customers, got K={self.n_vehicles}, "
                f"n={len(self.customers)}"
            )
        points = np.array([self.depot, *self.customers], dtype=np.float64)
        delta = points[:, None, :] - points[None, :, :]
        object.__setattr__(self, "distances", np.hypot(delta[..., 0], delta[..., 1]))

    @property
    def n_customers(self) -> int:
        return len(self.customers)


class VehicleRouting(Problem):
    def __init__(self, instance: VrpInstance):
        self.instance = instance
        self.name = instance.name
        self._domain = GeneDomain.permutation(instance.n_customers,
                                              instance.n_vehicles - 1)
        # symbol -> distance-matrix node: customers map to themselves,
        # separators to the depot (0), so route boundaries cost depot legs
        node_of = np.zeros(self._domain.length + 1, dtype=np.int64)
        node_of[1: instance.n_customers + 1] = np.arange(1, instance.n_customers + 1)
        self._node_of = node_of

    def domain(self) -> GeneDomain:
        return self._domain

    def evaluate(self, genes: Genome) -> float:
        genes = self._domain.validate(genes)
        return float(self.evaluate_batch(genes[None, :])[0])

    def evaluate_batch(self, genomes: np.ndarray) -> np.ndarray:
        nodes = self._node_of[genomes]
        depot = np.zeros((genomes.shape[0], 1), dtype=np.int64)
        path = np.concatenate([depot, nodes, depot], axis=1)
        return self.instance.distances[path[:, :-1], path[:, 1:]].sum(axis=1)


def vrp_decode(instance: VrpInstance, genes: Genome) -> list[list[int]]:
    """Split the genome into the K per-vehicle customer sequences."""
    domain = GeneDomain.permutation(instance.n_customers, instance.n_vehicles - 1)
    genes = domain.validate(genes)
    routes: list[list[int]] = [[]]
    for symbol in genes:
        if symbol > instance.n_customers:
            routes.append([])
        else:
            routes[-1].append(int(symbol))
    return routes


def generate_instance(n_customers: int, n_vehicles: int, seed: int,
                      name: str | None = None) -> VrpInstance:
    """Seeded instance: depot at (50, 50), customers uniform on [0, 100]^2."""
    if n_vehicles > n_customers:
        raise ValueError(f"vehicles ({n_vehicles}) must not exceed customers ({n_customers})")
    rng = make_rng(seed)
    coords = rng.uniform(0.0, 100.0, size=(n_customers, 2))
    return VrpInstance(
        name=name or f"vrp{n_customers}x{n_vehicles}s{seed}",
        n_vehicles=n_vehicles,
        depot=(50.0, 50.0),
        customers=tuple((float(x), float(y)) for x, y in coords),
    )


def standard_suite() -> list[VrpInstance]:
    return [generate_instance(n, k, seed, name=name)
            for name, n, k, seed in SUITE_DIMENSIONS]


# ---------------------------------------------------------------------------
# exact oracle

def vrp_brute_force(instance: VrpInstance) -> tuple[float, Genome]:
    """Global optimum by exhaustive enumeration; limited to small instances.

    Enumerates every customer ordering and every multiset of separator gaps
    (separator interchange and empty-segment placement collapse to identical
    route systems). Route costs are summed directly from the coordinates,
    independent of the decode/evaluate path.
    """
    n = instance.n_customers
    if n > BRUTE_FORCE_MAX_CUSTOMERS:
        raise ValueError(
            f"brute force limited to {BRUTE_FORCE_MAX_CUSTOMERS} customers, got {n}"
        )
    points = [instance.depot, *instance.customers]
    dist = [[math.hypot(ax - bx, ay - by) for bx, by in points] for ax, ay in points]

    k = instance.n_vehicles
    best_cost = math.inf
    best_order: tuple[int, ...] = ()
    best_gaps: tuple[int, ...] = ()
    for order in itertools.permutations(range(1, n + 1)):
        for gaps in itertools.combinations_with_replacement(range(n + 1), k - 1):
            bounds = (0, *gaps, n)
            cost = 0.0
            for start, stop in zip(bounds[:-1], bounds[1:]):
                if start == stop:
                    continue
                prev = 0
                for c in order[start:stop]:
                    cost += dist[prev][c]
                    prev = c
                cost += dist[prev][0]
            if cost < best_cost:
                best_cost = cost
                best_order, best_gaps = order, gaps
    return best_cost, _genome_from_split(n, best_order, best_gaps)


def _genome_from_split(n: int, order: tuple[int, ...], gaps: tuple[int, ...]) -> Genome:
    genes: list[int] = []
    position = 0
    for sep_index, gap in enumerate(gaps):
        genes.extend(order[position:gap])
        genes.append(n + 1 + sep_index)
        position = gap
    genes.extend(order[position:])
    return np.array(genes, dtype=np.int64)


# ---------------------------------------------------------------------------
# instance files

def format_instance(instance: VrpInstance) -> str:
    lines = [f"NAME {instance.name}",
             f"VEHICLES {instance.n_vehicles}",
             f"DEPOT {instance.depot[0]!r} {instance.depot[1]!r}"]
    for i, (x, y) in enumerate(instance.customers, start=1):
        lines.append(f"CUSTOMER {i} {x!r} {y!r}")
    return "\n".join(lines) + "\n"


def write_instance(instance: VrpInstance, path: str | Path) -> None:
    Path(path).write_text(format_instance(instance), encoding="utf-8")


def parse_instance(text: str) -> VrpInstance:
    name: str | None = None
    vehicles: int | None = None
    depot: tuple[float, float] | None = None
    customers: dict[int, tuple[float, float]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        try:
            if tag == "NAME" and len(fields) == 2:
                name = fields[1]
            elif tag == "VEHICLES" and len(fields) == 2:
                vehicles = int(fields[1])
            elif tag == "DEPOT" and len(fields) == 3:
                depot = (float(fields[1]), float(fields[2]))
            elif tag == "CUSTOMER" and len(fields) == 4:
                cid = int(fields[1])
                if cid in customers:
                    raise ValueError(f"duplicate customer id {cid}")
                customers[cid] = (float(fields[2]), float(fields[3]))
            else:
                raise ValueError(f"malformed record {line!r}")
        except ValueError as err:
            raise ValueError(f"line {line_no}: {err}") from None

    for label, value in (("NAME", name), ("VEHICLES", vehicles), ("DEPOT", depot)):
        if value is None:
            raise ValueError(f"missing {label} record")
    if not customers:
        raise ValueError("missing CUSTOMER records")
    ids = sorted(customers)
    if ids != list(range(1, len(ids) + 1)):
        raise ValueError(f"customer ids must be 1..n consecutive, got {ids}")
    return VrpInstance(name=name, n_vehicles=vehicles, depot=depot,
                       customers=tuple(customers[i] for i in ids))


def load_instance(path: str | Path) -> VrpInstance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))
