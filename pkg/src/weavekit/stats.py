"""Gaussian fits to the normalized Betti-number distributions.

The dimensions along the homological line, normalized by their total, look
strikingly normal.  We quantify that: fit a quadratic

    q_n(x) = -(alpha x^2 - beta x + delta)

by unweighted ordinary least squares to the points (i, ln(dim_i / total))
over all entries with dim_i > 0, and read off the implied normal density

    rho_n(x) = A_n exp(q_n(x)),   mu = beta/(2 alpha),
    sigma = 1/sqrt(2 alpha),      A_n = exp(-(beta^2/(4 alpha) - delta)) sqrt(alpha/pi),

where A_n is chosen so that rho_n integrates to one analytically.  The
deviation metrics are the plain L1 and L2 distances between rho_n and the
normalized data, summed over the data support (the Gaussian tails beyond
the support are below 1e-4 for every tabulated n and are not added).

Logs of the arbitrary-precision dimensions are taken directly with
math.log, which extracts mantissa and exponent exactly and so never
overflows — single dimensions reach ~1e135 in the larger tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Sequence

import numpy as np

from .errors import DegenerateFit, RangeError
from .khovanov import betti_line

__all__ = [
    "GaussianFit",
    "TableRow",
    "fit",
    "density",
    "l2_dev",
    "l1_dev",
    "table_row",
    "table_row_from_line",
    "sci6",
]


@dataclass(frozen=True)
class GaussianFit:
    """Quadratic log-fit parameters and the derived normal-density fields."""

    alpha: float
    beta: float
    delta: float

    @property
    def mu(self) -> float:
        return self.beta / (2 * self.alpha)

    @property
    def sigma(self) -> float:
        return 1 / math.sqrt(2 * self.alpha)

    @property
    def a_norm(self) -> float:
        return math.exp(-(self.beta**2 / (4 * self.alpha) - self.delta)) \
            * math.sqrt(self.alpha / math.pi)


@dataclass(frozen=True)
class TableRow:
    """One summary-table row: exact counts plus fitted width and deviations."""

    n: int
    total_dim: int
    dim_h01: int
    sigma: float
    l2: float
    l1: float


def fit(bettis: Sequence[tuple[int, int]]) -> GaussianFit:
    """Least-squares quadratic on the log-normalized dimensions.

    Needs at least three distinct abscissae with positive dimension and a
    concave result (alpha > 0); otherwise raises DegenerateFit.
    """
    total = sum(d for _, d in bettis)
    points = [(i, d) for i, d in bettis if d > 0]
    if len({i for i, _ in points}) < 3:
        raise DegenerateFit("need at least 3 distinct points with dim > 0")
    log_total = math.log(total)
    xs = np.array([i for i, _ in points], dtype=float)
    ys = np.array([math.log(d) - log_total for _, d in points])
    c2, c1, c0 = np.polyfit(xs, ys, 2)
    if not c2 < 0:
        raise DegenerateFit(f"fitted leading coefficient {-c2} is not positive")
    return GaussianFit(alpha=-float(c2), beta=float(c1), delta=-float(c0))


def density(f: GaussianFit, x: float) -> float:
    """rho_n(x) = A_n exp(q_n(x)); a true normal density in (mu, sigma)."""
    return f.a_norm * math.exp(-(f.alpha * x * x - f.beta * x + f.delta))


def _residuals(f: GaussianFit, bettis: Sequence[tuple[int, int]]) -> list[float]:
    total = sum(d for _, d in bettis)
    return [density(f, i) - d / total for i, d in bettis]


def l2_dev(f: GaussianFit, bettis: Sequence[tuple[int, int]]) -> float:
    """Root of the summed squared deviations over the data support."""
    return math.sqrt(sum(r * r for r in _residuals(f, bettis)))


def l1_dev(f: GaussianFit, bettis: Sequence[tuple[int, int]]) -> float:
    """Summed absolute deviations over the data support."""
    return sum(abs(r) for r in _residuals(f, bettis))


def table_row_from_line(n: int, bettis: Sequence[tuple[int, int]]) -> TableRow:
    """Assemble a summary row from an already-computed Betti line."""
    f = fit(bettis)
    dims = dict(bettis)
    return TableRow(
        n=n,
        total_dim=sum(d for _, d in bettis),
        dim_h01=dims.get(0, 0),
        sigma=f.sigma,
        l2=l2_dev(f, bettis),
        l1=l1_dev(f, bettis),
    )


def table_row(n: int) -> TableRow:
    """Summary row for W(3,n); requires a knot (gcd(3,n)=1)."""
    if n < 2 or math.gcd(3, n) != 1:
        raise RangeError(f"summary rows require a knot with n >= 2, got n={n}")
    return table_row_from_line(n, betti_line(n))


def sci6(value: int) -> str:
    """First six significant digits in compact scientific form: 3.13688e41."""
    return f"{Decimal(value):.5E}".replace("E+", "e").replace("E", "e")
