"""Input validation helpers shared by the estimator and harness APIs."""

from __future__ import annotations

from typing import Sequence

import numpy as np


class NotFittedError(ValueError):
    """Raised when fitted attributes are requested before fit()."""


def check_is_fitted(estimator, attribute: str = "best_cost_") -> None:
    if not hasattr(estimator, attribute):
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit(problem) first"
        )


def check_int(name: str, value, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_fraction(name: str, value, low: float = 0.0, high: float = 1.0,
                   low_open: bool = False) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a number, got {value!r}") from None
    if value < low or value > high or (low_open and value == low):
        bracket = "(" if low_open else "["
        raise ValueError(f"{name} must be in {bracket}{low}, {high}], got {value}")
    return value


def check_weights(name: str, weights: Sequence[float], size: int = 3,
                  require_positive: bool = False) -> tuple[float, ...]:
    values = tuple(float(w) for w in weights)
    if len(values) != size:
        raise ValueError(f"{name} must have {size} entries, got {len(values)}")
    if any(w < 0 for w in values):
        raise ValueError(f"{name} entries must be non-negative, got {values}")
    if require_positive and sum(values) <= 0:
        raise ValueError(f"{name} must contain at least one positive entry")
    return values
