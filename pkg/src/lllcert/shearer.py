"""Shearer's condition: the q̆ and q coefficient tables and the certified bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

import numpy as np

from .graph import Graph, external, enumerate_independent_subsets, full_set, members
from .numeric import EXACT, NumericPolicy, Scalar, ZERO, format_scalar, sign
from .tables import CoefficientTable, check_table_size, pivot_table


class ProbVector(tuple):
    """Per-vertex probability bounds, each in ``[0, 1]``."""

    def __new__(cls, values, policy: NumericPolicy = EXACT):
        vals = [policy.convert(v) for v in values]
        for i, v in enumerate(vals):
            if not 0 <= v <= 1:
                raise ValueError(f"p_{i + 1} = {v} is not a probability")
        return super().__new__(cls, vals)

    @classmethod
    def coerce(cls, p, n: int, policy: NumericPolicy = EXACT) -> "ProbVector":
        if len(p) != n:
            raise ValueError(f"probability vector has length {len(p)}, graph has {n} vertices")
        if isinstance(p, ProbVector) and _matches(p, policy):
            return p
        return cls(p, policy)


def _matches(values, policy: NumericPolicy) -> bool:
    want = Fraction if policy.exact else float
    return all(isinstance(v, want) for v in values)


@dataclass
class ShearerReport:
    holds: bool
    violating_set: int | None
    bound: Scalar | None
    n: int
    mode: str
    degenerate: bool = False
    table_stats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "bound": None if self.bound is None else format_scalar(self.bound),
            "violating_set": None if self.violating_set is None else external(self.violating_set),
            "n": self.n,
            "mode": self.mode,
            "degenerate": self.degenerate,
        }


def breve_q_table(G: Graph, p: Sequence, policy: NumericPolicy = EXACT) -> CoefficientTable:
    """q̆_S for every S, via q̆_A = q̆_{A-a} - p_a q̆_{A∖Γ⁺(a)} with a = min(A)."""
    p = ProbVector.coerce(p, G.n, policy)
    return pivot_table(G, p, -1, "breve_q", policy)


def check_shearer(G: Graph, p: Sequence, policy: NumericPolicy = EXACT) -> ShearerReport:
    """Decide whether q̆_S >= 0 for all S.

    When it holds, ``bound = q̆_[n]`` lower-bounds the probability that no
    event occurs.  A zero bound is flagged ``degenerate``: the certificate is
    then vacuous.
    """
    table = breve_q_table(G, p, policy)
    bad = table.first_negative(policy)
    stats = {"entries": len(table), "seconds": table.elapsed}
    if bad is not None:
        return ShearerReport(False, bad, None, G.n, policy.mode, table_stats=stats)
    bound = table.full
    if not policy.exact and sign(bound, policy) == ZERO:
        bound = 0.0
    return ShearerReport(True, None, bound, G.n, policy.mode,
                         degenerate=sign(bound, policy) == ZERO, table_stats=stats)


def q_table(G: Graph, p: Sequence, policy: NumericPolicy = EXACT) -> CoefficientTable:
    """q_S = Σ_{I ∈ Ind, I ⊇ S} (-1)^{|I∖S|} p^I over an explicit list of Ind(G).

    The terms p^I are placed on the enumerated independent sets and summed
    with signs by a superset Möbius transform.  Oracle use only.
    """
    p = ProbVector.coerce(p, G.n, policy)
    n = G.n
    check_table_size(n)
    ind = enumerate_independent_subsets(G, full_set(n))
    size = 1 << n
    if policy.exact:
        scale = 1
        for v in p:
            scale *= v.denominator
        t = [0] * size
        for I in ind:
            # scale * p^I = prod_{i in I} num_i * prod_{i not in I} den_i
            val = 1
            for i, v in enumerate(p):
                val *= v.numerator if I >> i & 1 else v.denominator
            t[I] = val
    else:
        scale = None
        t = np.zeros(size)
        for I in ind:
            t[I] = prod(p[i] for i in members(I))
    for i in range(n):
        bit = 1 << i
        for S in range(size):
            if not S & bit:
                t[S] -= t[S | bit]
    return CoefficientTable("q", n, t, scale)


def _subset_sums(data, n: int, exact: bool):
    """f[S] = Σ_{T ⊆ S} data[T] (zeta transform over the subset lattice)."""
    f = list(data) if exact else np.array(data, dtype=float)
    for i in range(n):
        bit = 1 << i
        for S in range(1 << n):
            if S & bit:
                f[S] += f[S ^ bit]
    return f


def verify_q_breveq_relation(G: Graph, p: Sequence, policy: NumericPolicy = EXACT,
                             oracle_cap: int = 12) -> bool:
    """Check q̆_S = Σ_{T ⊆ [n]∖S} q_T for every S, and q̆_[n] = q_∅."""
    check_table_size(G.n, oracle_cap)
    bq = breve_q_table(G, p, policy)
    q = q_table(G, p, policy)
    full = full_set(G.n)
    sums = _subset_sums(q.data, G.n, policy.exact)
    if policy.exact:
        # both tables share scale = prod(denominators of p)
        assert bq.scale == q.scale
        ok = all(bq.data[S] == sums[full ^ S] for S in range(1 << G.n))
        return ok and bq.data[full] == q.data[0]
    tol = policy.epsilon
    ok = all(abs(bq.data[S] - sums[full ^ S]) <= tol * max(1.0, abs(bq.data[S]))
             for S in range(1 << G.n))
    return ok and abs(bq.data[full] - q.data[0]) <= tol
