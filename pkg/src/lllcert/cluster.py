"""Cluster-expansion condition: independence polynomial, checks and certificate search."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .graph import Graph, full_set, induced_components, lowest
from .numeric import (EXACT, FLOAT, NEGATIVE, NumericPolicy, Scalar, format_scalar,
                      rationalize, sign)
from .shearer import ProbVector, breve_q_table
from .tables import CoefficientTable, check_table_size, pivot_table, ratio_chain_violation

log = logging.getLogger(__name__)

# Relative inflation of p used to give the exported certificate strict slack.
EXACT_MARGIN = 1e-6
# Weight given to vertices with p_i = 0 (they never move during the search).
INERT_WEIGHT = Fraction(1, 10**12)
# Convergence tolerance for the extra pass when the tight point misses the float check.
POLISH_TOL = 1e-15


class WeightVector(tuple):
    """Strictly positive per-vertex weights y_i."""

    def __new__(cls, values, policy: NumericPolicy = EXACT):
        vals = [policy.convert(v) for v in values]
        for i, v in enumerate(vals):
            if not v > 0:
                raise ValueError(f"weight y_{i + 1} = {v} must be positive")
        return super().__new__(cls, vals)

    @classmethod
    def coerce(cls, y, n: int, policy: NumericPolicy = EXACT) -> "WeightVector":
        if len(y) != n:
            raise ValueError(f"weight vector has length {len(y)}, graph has {n} vertices")
        return cls(y, policy)


class IndependencePolynomial:
    """Memoised Y_S = Σ_{I ∈ Ind, I ⊆ S} y^I for one fixed weight vector.

    Evaluation splits S into induced components and multiplies, and on a
    connected S applies Y_A = Y_{A-a} + y_a Y_{A∖Γ⁺(a)} with a = min(A).
    Build a new instance whenever y changes.
    """

    def __init__(self, G: Graph, y: Sequence[Scalar], policy: NumericPolicy = EXACT,
                 validate: bool = True):
        self.G = G
        self.policy = policy
        if validate:
            y = WeightVector.coerce(y, G.n, policy)
        self.y = tuple(y)
        one = Fraction(1) if policy.exact else 1.0
        self._cache: dict[int, Scalar] = {0: one}

    def __call__(self, S: int) -> Scalar:
        cache = self._cache
        if S in cache:
            return cache[S]
        parts = induced_components(self.G, S)
        if len(parts) > 1:
            value = prod(self(P) for P in parts)
        else:
            a = lowest(S)
            value = self(S & ~(1 << a)) + self.y[a] * self(S & ~self.G.closed(a))
        cache[S] = value
        return value

    def __len__(self) -> int:
        return len(self._cache)


def independence_polynomial(G: Graph, S: int, y: Sequence, policy: NumericPolicy = EXACT) -> Scalar:
    return IndependencePolynomial(G, y, policy)(S)


def y_table(G: Graph, y: Sequence, policy: NumericPolicy = EXACT) -> CoefficientTable:
    """Y_S for all 2^n sets by the subset-lattice DP."""
    y = WeightVector.coerce(y, G.n, policy)
    return pivot_table(G, y, +1, "Y", policy)


@dataclass
class ClusterReport:
    holds: bool
    slack: list
    bound: Scalar | None
    y_used: tuple
    mode: str

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "bound": None if self.bound is None else format_scalar(self.bound),
            "slack": [format_scalar(s) for s in self.slack],
            "y": [format_scalar(v) for v in self.y_used],
            "mode": self.mode,
        }


def check_cluster(G: Graph, p: Sequence, y: Sequence, policy: NumericPolicy = EXACT) -> ClusterReport:
    """Test p_i <= y_i / Y_{Γ⁺(i)} at every vertex.

    Slacks ``y_i / Y_{Γ⁺(i)} - p_i`` are reported whether or not the
    condition holds; ``bound = 1/Y_[n]`` only when it does.
    """
    p = ProbVector.coerce(p, G.n, policy)
    Y = IndependencePolynomial(G, y, policy)
    slack = [Y.y[i] / Y(G.closed(i)) - p[i] for i in range(G.n)]
    holds = all(sign(s, policy) != NEGATIVE for s in slack)
    bound = 1 / Y(full_set(G.n)) if holds else None
    return ClusterReport(holds, slack, bound, Y.y, policy.mode)


def cluster_bound(G: Graph, y: Sequence, policy: NumericPolicy = EXACT) -> Scalar:
    """1 / Y_[n](y)."""
    return 1 / independence_polynomial(G, full_set(G.n), y, policy)


@dataclass
class Certificate:
    y: tuple
    iterations: int
    converged: bool
    validation: str = "none"   # "exact", "float-only" or "none"
    report: ClusterReport | None = None
    reason: str = ""
    monotone: bool = True
    trace: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        rep = self.report
        return {
            "y": [format_scalar(v) for v in self.y],
            "converged": self.converged,
            "iterations": self.iterations,
            "holds": bool(rep and rep.holds),
            "bound": None if rep is None or rep.bound is None else format_scalar(rep.bound),
            "slack": [] if rep is None else [format_scalar(s) for s in rep.slack],
            "validation": self.validation,
            "status": "certified" if self.converged else "no certificate found",
            "reason": self.reason,
        }


def _iterate(G: Graph, p: list[float], y: list[float], tol: float, cap: float, max_iter: int,
             trace: list | None = None):
    """Run y <- p * Y_{Γ⁺}(y) from ``y``.

    Returns ``(y, iterations, status, monotone)`` with status one of
    ``"converged"``, ``"cap"`` or ``"max_iter"``.
    """
    n = G.n
    closed = [G.closed(i) for i in range(n)]
    monotone = True
    for t in range(1, max_iter + 1):
        Y = IndependencePolynomial(G, y, FLOAT, validate=False)
        new = [p[i] * Y(closed[i]) for i in range(n)]
        if any(new[i] < y[i] * (1 - 1e-13) for i in range(n)):
            monotone = False
        if trace is not None:
            trace.append(new)
        if any(v > cap for v in new):
            return new, t, "cap", monotone
        done = all(abs(new[i] - y[i]) <= tol * new[i] for i in range(n))
        y = new
        if done:
            return y, t, "converged", monotone
    return y, max_iter, "max_iter", monotone


def find_y(G: Graph, p: Sequence, tol: float = 1e-10, cap: float = 1e6, max_iter: int = 10000,
           keep_trace: bool = False) -> Certificate:
    """Search for weights y certifying the cluster-expansion condition for p.

    Iterates the monotone map y <- p * Y_{Γ⁺}(y) from y = p; it either
    settles on the least fixed point or runs past ``cap``.  A failure means
    no certificate was found, not that the condition is false.

    A converged point is re-solved for p inflated by ``EXACT_MARGIN`` so the
    exported weights have strict slack, then rationalised and checked in
    exact arithmetic.  If that check fails the certificate is kept as
    ``"float-only"`` (validated with the float tolerance).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not cap > 1:
        raise ValueError("cap must exceed 1")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    p_exact = ProbVector.coerce(p, G.n, EXACT)
    pf = [float(v) for v in p_exact]
    if any(v == 1 for v in p_exact):
        return Certificate(tuple(pf), 0, False, reason="some p_i = 1")

    trace = [] if keep_trace else None
    y, iters, status, monotone = _iterate(G, pf, list(pf), tol, cap, max_iter, trace)
    if status != "converged":
        reason = "iterate exceeded cap" if status == "cap" else "max_iter reached"
        return Certificate(tuple(y), iters, False, reason=reason, monotone=monotone,
                           trace=trace or [])

    inflated = [v * (1 + EXACT_MARGIN) for v in pf]
    y2, extra, status2, _ = _iterate(G, inflated, y, tol, cap, max_iter)
    if status2 == "converged":
        y = y2
    else:
        log.info("inflated search did not converge (%s); keeping the tight point", status2)
    inert = float(INERT_WEIGHT)
    y = [v if v > 0 else inert for v in y]

    float_rep = check_cluster(G, pf, y, FLOAT)
    if not float_rep.holds:
        # stopping at relative change tol leaves slack around -tol * p_i
        y, _, _, _ = _iterate(G, pf, y, POLISH_TOL, cap, max_iter)
        y = [v if v > 0 else inert for v in y]
        float_rep = check_cluster(G, pf, y, FLOAT)
    if not float_rep.holds:
        return Certificate(tuple(y), iters, False, report=float_rep, monotone=monotone,
                           reason="converged point fails the float check", trace=trace or [])
    yq = [rationalize(v) if v != inert else INERT_WEIGHT for v in y]
    exact_rep = check_cluster(G, p_exact, yq, EXACT)
    if exact_rep.holds:
        return Certificate(tuple(yq), iters, True, "exact", exact_rep, monotone=monotone,
                           trace=trace or [])
    return Certificate(tuple(y), iters, True, "float-only", float_rep, monotone=monotone,
                       trace=trace or [])


def verify_cluster_vs_shearer(G: Graph, p: Sequence, y: Sequence, policy: NumericPolicy = EXACT,
                              oracle_cap: int = 12) -> bool:
    """Check q̆_S/q̆_{S-a} >= Y_{S^c}/Y_{(S-a)^c} for all a ∈ S, and q̆_[n] >= 1/Y_[n].

    Requires (p, y) to satisfy the cluster-expansion condition.
    """
    check_table_size(G.n, oracle_cap)
    if not check_cluster(G, p, y, policy).holds:
        raise ValueError("(p, y) does not satisfy the cluster-expansion condition")
    bq = breve_q_table(G, p, policy)
    Yt = y_table(G, y, policy)
    if ratio_chain_violation(bq, Yt, complement=True, policy=policy) is not None:
        return False
    full = full_set(G.n)
    if policy.exact:
        return bq.data[full] * Yt.data[full] >= bq.scale * Yt.scale
    return bq.full * Yt.full >= 1 - policy.epsilon
