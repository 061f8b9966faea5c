"""Reservoir transfer functions: truncated odd power series and exact tanh.

A ``TransferSpec`` selects either the hyperbolic tangent or its power-series
truncation to ``m`` odd terms; order 1 is the identity, so the same family
covers the linear network.  Coefficients are hard-coded exact rationals up
to order 16 and cross-checked in the test suite against the Bernoulli-number
formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidRangeError

__all__ = [
    "MAX_ORDER",
    "TransferSpec",
    "TANH",
    "taylor",
    "parse_transfer",
    "taylor_coefficients",
    "taylor_coefficients_exact",
    "evaluate",
    "rmse_to_tanh",
]

MAX_ORDER = 16

# Coefficient of x^(2k-1) in the tanh power series, k = 1..16.
_EXACT_COEFFICIENTS = (
    Fraction(1),
    Fraction(-1, 3),
    Fraction(2, 15),
    Fraction(-17, 315),
    Fraction(62, 2835),
    Fraction(-1382, 155925),
    Fraction(21844, 6081075),
    Fraction(-929569, 638512875),
    Fraction(6404582, 10854718875),
    Fraction(-443861162, 1856156927625),
    Fraction(18888466084, 194896477400625),
    Fraction(-113927491862, 2900518163668125),
    Fraction(58870668456604, 3698160658676859375),
    Fraction(-8374643517010684, 1298054391195577640625),
    Fraction(689005380505609448, 263505041412702261046875),
    Fraction(-129848163681107301953, 122529844256906551386796875),
)

_FLOAT_COEFFICIENTS = np.array([float(c) for c in _EXACT_COEFFICIENTS])


@dataclass(frozen=True)
class TransferSpec:
    """Which nonlinearity a reservoir applies element-wise.

    ``kind`` is ``"taylor"`` (with ``order`` = number of series terms kept)
    or ``"tanh"``.  ``taylor`` of order 1 is the identity, i.e. the linear
    network.
    """

    kind: str
    order: int = 0

    def __post_init__(self):
        if self.kind == "tanh":
            if self.order != 0:
                raise InvalidRangeError("tanh spec carries no order")
        elif self.kind == "taylor":
            if not 1 <= self.order <= MAX_ORDER:
                raise InvalidRangeError(
                    f"taylor order must be in 1..{MAX_ORDER}, got {self.order}"
                )
        else:
            raise InvalidRangeError(f"unknown transfer kind {self.kind!r}")

    @property
    def token(self) -> str:
        """Serialization token: ``"tanh"`` or ``"taylor:<m>"``."""
        return "tanh" if self.kind == "tanh" else f"taylor:{self.order}"

    def __str__(self) -> str:
        return self.token


TANH = TransferSpec("tanh")


def taylor(order: int) -> TransferSpec:
    return TransferSpec("taylor", order)


def parse_transfer(token: str) -> TransferSpec:
    """Inverse of :attr:`TransferSpec.token`."""
    if token == "tanh":
        return TANH
    if token.startswith("taylor:"):
        try:
            order = int(token.split(":", 1)[1])
        except ValueError as e:
            raise InvalidRangeError(f"bad transfer token {token!r}") from e
        return taylor(order)
    raise InvalidRangeError(f"bad transfer token {token!r}")


def taylor_coefficients_exact(order: int) -> tuple[Fraction, ...]:
    """Exact rational coefficients of x^1, x^3, ..., x^(2*order-1)."""
    if not 1 <= order <= MAX_ORDER:
        raise InvalidRangeError(f"order must be in 1..{MAX_ORDER}, got {order}")
    return _EXACT_COEFFICIENTS[:order]


def taylor_coefficients(order: int) -> list[float]:
    """Float coefficients; exact-rational values rounded once to double."""
    return [float(c) for c in taylor_coefficients_exact(order)]


def coefficient_array(spec: TransferSpec) -> np.ndarray:
    """Coefficient vector consumed by the drive kernels (empty for tanh)."""
    if spec.kind == "tanh":
        return np.empty(0)
    return _FLOAT_COEFFICIENTS[: spec.order].copy()


def evaluate(spec: TransferSpec, x):
    """Apply the transfer function to a scalar or array.

    Truncated series are evaluated with Horner's rule in x^2; they may leave
    [-1, 1] for |x| > 1, which is expected divergence, not an error.
    """
    if spec.kind == "tanh":
        return np.tanh(x)
    c = _FLOAT_COEFFICIENTS
    m = spec.order
    xa = np.asarray(x, dtype=float)
    s = xa * xa
    p = np.full_like(xa, c[m - 1])
    for k in range(m - 2, -1, -1):
        p = p * s + c[k]
    out = xa * p
    return float(out) if np.isscalar(x) or out.ndim == 0 else out


def rmse_to_tanh(order: int, grid_points: int = 1001) -> float:
    """RMSE between the order-m series and tanh on a uniform grid over [-1, 1]."""
    if grid_points < 2:
        raise InvalidRangeError(f"grid_points must be >= 2, got {grid_points}")
    grid = np.linspace(-1.0, 1.0, grid_points)
    err = evaluate(taylor(order), grid) - np.tanh(grid)
    return float(np.sqrt(np.mean(err * err)))
