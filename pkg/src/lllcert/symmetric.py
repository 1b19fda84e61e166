"""Symmetric local-lemma thresholds as functions of the maximum degree d."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cluster import ClusterReport, check_cluster
from .graph import Graph
from .numeric import EXACT, FLOAT, NEGATIVE, NumericPolicy, Scalar, format_scalar, sign


@dataclass(frozen=True)
class ThresholdSet:
    d: int
    erdos_lovasz: Fraction   # 1/(4d)
    spencer: Fraction        # d^d / (d+1)^(d+1)
    shearer: Fraction        # (d-1)^(d-1) / d^d
    cluster_ed: float        # 1/(e d)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "erdos_lovasz": format_scalar(self.erdos_lovasz),
            "spencer": format_scalar(self.spencer),
            "shearer": format_scalar(self.shearer),
            "cluster_ed": self.cluster_ed,
        }


def _check_degree(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise ValueError(f"maximum degree must be an integer >= 2, got {d!r}")


def symmetric_thresholds(d: int) -> ThresholdSet:
    _check_degree(d)
    return ThresholdSet(
        d=d,
        erdos_lovasz=Fraction(1, 4 * d),
        spencer=Fraction(d**d, (d + 1) ** (d + 1)),
        shearer=Fraction((d - 1) ** (d - 1), d**d),
        cluster_ed=1 / (math.e * d),
    )


def symm_inequality_margin(d: int) -> float:
    """e - (1/d + (d/(d-1))^(d-1)); nonnegative when the inequality holds."""
    _check_degree(d)
    # (d/(d-1))^(d-1) = exp(-(d-1) log(1 - 1/d)), accurate for huge d via log1p
    power = math.exp(-(d - 1) * math.log1p(-1 / d))
    return math.e - (1 / d + power)


def check_symm_inequality(d: int, policy: NumericPolicy = FLOAT) -> bool:
    """Whether e >= 1/d + (d/(d-1))^(d-1), decided in float with tolerance."""
    return sign(symm_inequality_margin(d), policy) != NEGATIVE


def symmetric_certificate(G: Graph, p_val: Scalar, policy: NumericPolicy = EXACT) -> ClusterReport:
    """Check uniform p_val against the uniform weights y = 1/(d-1).

    ``d`` is the graph's actual maximum degree.  For ``p_val <= 1/(ed)`` the
    returned report always holds.
    """
    d = G.max_degree
    if d < 2:
        raise ValueError(f"graph has maximum degree {d}; need d >= 2")
    y = Fraction(1, d - 1) if policy.exact else 1 / (d - 1)
    return check_cluster(G, [p_val] * G.n, [y] * G.n, policy)
