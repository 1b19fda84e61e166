"""Explicit finite probability spaces used as ground truth.

A space is a list of atoms, each with a weight and the set of events it lies
in (a bitmask over event indices).  All probabilities are exact sums of atom
weights; nothing is sampled.
"""

from __future__ import annotations

import json
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cluster import y_table
from .graph import (Graph, enumerate_independent_subsets, external, full_set, members,
                    submasks, vset)
from .numeric import EXACT, NumericPolicy, Scalar, format_scalar, parse_scalar
from .shearer import ProbVector, breve_q_table, check_shearer, q_table
from .tables import CoefficientTable, check_table_size, ratio_chain_violation

log = logging.getLogger(__name__)

ORACLE_CAP = 12


class ShearerViolation(ValueError):
    """The tight instance needs Shearer's condition; it failed."""


class UndefinedConditional(ZeroDivisionError):
    """Conditioning on an event of probability zero."""


@dataclass(frozen=True)
class FiniteSpace:
    n: int
    weights: tuple
    events: tuple   # events[k] = bitmask of the E_i containing atom k

    def __post_init__(self):
        if len(self.weights) != len(self.events):
            raise ValueError("weights and events must have equal length")
        for k, (w, ev) in enumerate(zip(self.weights, self.events)):
            if w < 0:
                raise ValueError(f"atom {k} has negative weight {w}")
            if ev >> self.n:
                raise ValueError(f"atom {k} lies in an event index beyond n={self.n}")
        total = sum(self.weights)
        if self.exact:
            if total != 1:
                raise ValueError(f"atom weights sum to {total}, not 1")
        elif abs(total - 1) > 1e-12:
            raise ValueError(f"atom weights sum to {total}, not 1")

    @property
    def exact(self) -> bool:
        return all(isinstance(w, Fraction) for w in self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def to_json(self) -> dict:
        return {
            "atoms": [{"w": format_scalar(w), "events": external(ev)}
                      for w, ev in zip(self.weights, self.events)],
            "n": self.n,
        }

    @classmethod
    def from_json(cls, doc) -> "FiniteSpace":
        if isinstance(doc, str):
            doc = json.loads(doc)
        n = doc["n"]
        weights, events = [], []
        for atom in doc["atoms"]:
            w = atom["w"]
            weights.append(parse_scalar(w if isinstance(w, str) else repr(w)))
            evs = atom.get("events", [])
            if any(not 1 <= i <= n for i in evs):
                raise ValueError(f"atom event index out of range 1..{n}: {evs}")
            events.append(vset(i - 1 for i in evs))
        return cls(n, tuple(weights), tuple(events))


def none_table(space: FiniteSpace) -> CoefficientTable:
    """P̆_A = Pr[no event of A occurs] for every A.

    An atom avoids every event of A iff A ⊆ complement(events), so the table
    is a superset-sum transform of the atom weights placed at complements.
    """
    n = space.n
    check_table_size(n)
    full = full_set(n)
    size = 1 << n
    if space.exact:
        scale = 1
        for w in space.weights:
            scale = math.lcm(scale, w.denominator)
        f = [0] * size
        for w, ev in zip(space.weights, space.events):
            f[full ^ ev] += w.numerator * (scale // w.denominator)
    else:
        scale = None
        f = np.zeros(size)
        for w, ev in zip(space.weights, space.events):
            f[full ^ ev] += float(w)
    for i in range(n):
        bit = 1 << i
        for S in range(size):
            if not S & bit:
                f[S] += f[S | bit]
    return CoefficientTable("P", n, f, scale)


def prob_none(space: FiniteSpace, A: int) -> Scalar:
    """Pr[⋂_{i∈A} Ē_i] by direct summation."""
    return sum((w for w, ev in zip(space.weights, space.events) if not ev & A),
               Fraction(0) if space.exact else 0.0)


def prob_event(space: FiniteSpace, i: int) -> Scalar:
    return sum((w for w, ev in zip(space.weights, space.events) if ev >> i & 1),
               Fraction(0) if space.exact else 0.0)


def conditional_prob(space: FiniteSpace, i: int, J: int) -> Scalar:
    """Pr[E_i | ⋂_{j∈J} Ē_j]."""
    if J >> i & 1:
        raise ValueError("conditioning set must not contain i")
    denom = prob_none(space, J)
    if denom == 0:
        raise UndefinedConditional(f"Pr[no event of {external(J)}] = 0")
    joint = sum((w for w, ev in zip(space.weights, space.events)
                 if ev >> i & 1 and not ev & J), Fraction(0) if space.exact else 0.0)
    return joint / denom


@dataclass
class LopsidedReport:
    holds: bool
    dep2_equality: bool
    witness: tuple[int, int] | None   # (i, J) breaking the bound
    checked: int
    skipped: int

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "dep2_equality": self.dep2_equality,
            "witness": None if self.witness is None else
            {"i": self.witness[0] + 1, "J": external(self.witness[1])},
            "checked": self.checked,
            "skipped": self.skipped,
        }


def _oracle_tables(space: FiniteSpace, G: Graph, p, oracle_cap: int, policy: NumericPolicy):
    if space.n != G.n:
        raise ValueError(f"space has {space.n} events, graph has {G.n} vertices")
    check_table_size(G.n, oracle_cap)
    return none_table(space), ProbVector.coerce(p, G.n, policy)


def check_lopsided_condition(space: FiniteSpace, G: Graph, p: Sequence,
                             policy: NumericPolicy = EXACT,
                             oracle_cap: int = ORACLE_CAP) -> LopsidedReport:
    """Check Pr[E_i | ⋂_{j∈J} Ē_j] <= p_i for all i and J ⊆ [n]∖Γ⁺(i).

    Also reports whether every such conditional equals Pr[E_i] (the
    independence regime).  Conditionals on null events are skipped.
    """
    P, p = _oracle_tables(space, G, p, oracle_cap, policy)
    full = full_set(G.n)
    exact = P.exact and policy.exact
    data = P.data if exact else [float(v) for v in P]
    scale = P.scale if exact else 1.0
    eps = policy.epsilon
    holds, equal = True, True
    witness = None
    checked = skipped = 0
    for i in range(G.n):
        bit = 1 << i
        marg = scale - data[bit]          # scale * Pr[E_i]
        for J in submasks(full & ~G.closed(i)):
            pj = data[J]
            if pj <= 0:
                skipped += 1
                log.debug("skipping null conditional i=%d J=%s", i + 1, external(J))
                continue
            checked += 1
            joint = pj - data[J | bit]    # scale * Pr[E_i and no event of J]
            if exact:
                over = joint * p[i].denominator > p[i].numerator * pj
                same = joint * scale == marg * pj
            else:
                over = joint / pj > p[i] + eps
                same = abs(joint / pj - marg) <= eps
            if over and holds:
                holds, witness = False, (i, J)
            equal = equal and same
    return LopsidedReport(holds, equal, witness, checked, skipped)


@dataclass
class BoundReport:
    worst_gap: Scalar
    worst_set: int
    all_hold: bool

    def to_json(self) -> dict:
        return {"worst_gap": format_scalar(self.worst_gap), "worst_set": external(self.worst_set),
                "all_hold": self.all_hold}


def verify_bound(space: FiniteSpace, G: Graph, p: Sequence, policy: NumericPolicy = EXACT,
                 oracle_cap: int = ORACLE_CAP) -> BoundReport:
    """min over A of P̆_A - q̆_A, with the first minimising A."""
    P, p = _oracle_tables(space, G, p, oracle_cap, policy)
    Q = breve_q_table(G, p, policy)
    if P.exact and Q.exact:
        gaps = [P.data[S] * Q.scale - Q.data[S] * P.scale for S in range(len(P))]
        worst = min(range(len(gaps)), key=gaps.__getitem__)
        gap = Fraction(gaps[worst], P.scale * Q.scale)
        return BoundReport(gap, worst, gap >= 0)
    gaps = [float(P[S]) - float(Q[S]) for S in range(len(P))]
    worst = min(range(len(gaps)), key=gaps.__getitem__)
    return BoundReport(gaps[worst], worst, gaps[worst] >= -policy.epsilon)


def verify_fundamental_inequality(space: FiniteSpace, G: Graph, p: Sequence,
                                  policy: NumericPolicy = EXACT,
                                  oracle_cap: int = ORACLE_CAP) -> bool:
    """P̆_A >= P̆_{A-a} - p_a P̆_{A∖Γ⁺(a)} for every A and every a ∈ A."""
    P, p = _oracle_tables(space, G, p, oracle_cap, policy)
    exact = P.exact and policy.exact
    data = P.data if exact else [float(v) for v in P]
    for A in range(1, len(P)):
        for a in members(A):
            rest = data[A & ~G.closed(a)]
            if exact:
                num, den = p[a].numerator, p[a].denominator
                if data[A] * den < data[A ^ (1 << a)] * den - num * rest:
                    return False
            elif data[A] < data[A ^ (1 << a)] - p[a] * rest - policy.epsilon:
                return False
    return True


def verify_shearer_chain(space: FiniteSpace, G: Graph, p: Sequence, policy: NumericPolicy = EXACT,
                         oracle_cap: int = ORACLE_CAP) -> bool:
    """P̆_A/P̆_{A-a} >= q̆_A/q̆_{A-a} wherever q̆_{A-a} > 0."""
    P, p = _oracle_tables(space, G, p, oracle_cap, policy)
    Q = breve_q_table(G, p, policy)
    return ratio_chain_violation(P, Q, complement=False, policy=policy) is None


def verify_cluster_chain(space: FiniteSpace, G: Graph, y: Sequence, policy: NumericPolicy = EXACT,
                         oracle_cap: int = ORACLE_CAP) -> bool:
    """P̆_S > 0, P̆_S/P̆_{S-a} >= Y_{S^c}/Y_{(S-a)^c} for all a ∈ S, and P̆_[n] >= 1/Y_[n]."""
    if space.n != G.n:
        raise ValueError(f"space has {space.n} events, graph has {G.n} vertices")
    check_table_size(G.n, oracle_cap)
    P = none_table(space)
    Y = y_table(G, y, policy)
    if P.exact and policy.exact:
        if any(v <= 0 for v in P.data):
            return False
        full = len(P) - 1
        if P.data[full] * Y.data[full] < P.scale * Y.scale:
            return False
    else:
        if any(float(v) <= 0 for v in P):
            return False
        if float(P.full) * float(Y.full) < 1 - policy.epsilon:
            return False
    return ratio_chain_violation(P, Y, complement=True, policy=policy) is None


# -- constructions ----------------------------------------------------------

def tight_instance(G: Graph, p: Sequence, policy: NumericPolicy = EXACT) -> FiniteSpace:
    """Shearer's extremal space: one atom per independent set I, weight q_I,
    lying in exactly the events indexed by I."""
    p = ProbVector.coerce(p, G.n, policy)
    report = check_shearer(G, p, policy)
    if not report.holds:
        raise ShearerViolation(
            f"Shearer's condition fails at {external(report.violating_set)}; "
            "tight-instance weights would be negative")
    q = q_table(G, p, policy)
    atoms = enumerate_independent_subsets(G, full_set(G.n))
    weights = [q[I] for I in atoms]
    if not policy.exact:
        # q_I can come out as -1e-17 at the boundary
        weights = [max(w, 0.0) for w in weights]
    return FiniteSpace(G.n, tuple(weights), tuple(atoms))


_COIN_BIASES = [Fraction(k, m) for m in (2, 3, 4, 5) for k in range(1, m)]


def random_product_space(G: Graph, seed: int, max_shared: int = 6) -> tuple[FiniteSpace, ProbVector]:
    """A variable-model instance whose dependency graph is a subgraph of G.

    Each vertex owns a private biased coin; a random subset of the edges
    (at most ``max_shared``) each get a coin shared by both endpoints.
    E_i occurs iff every coin of vertex i lands heads, so events that share
    no coin are independent.  Returns the space and the exact marginals.
    """
    check_table_size(G.n, ORACLE_CAP)
    rng = random.Random(seed)
    edges = [e for e in G.edges() if rng.random() < 0.5]
    rng.shuffle(edges)
    edges = sorted(edges[:max_shared])
    private = [rng.choice(_COIN_BIASES) for _ in range(G.n)]
    shared = [rng.choice(_COIN_BIASES) for _ in edges]

    dist: dict[int, Fraction] = {}
    for config in range(1 << len(edges)):
        w = Fraction(1)
        blocked = 0
        for k, (i, j) in enumerate(edges):
            if config >> k & 1:
                w *= shared[k]
            else:
                w *= 1 - shared[k]
                blocked |= (1 << i) | (1 << j)
        part = {0: w}
        for i in range(G.n):
            if blocked >> i & 1:
                continue
            r = private[i]
            nxt: dict[int, Fraction] = {}
            for ev, pw in part.items():
                nxt[ev | 1 << i] = nxt.get(ev | 1 << i, 0) + pw * r
                nxt[ev] = nxt.get(ev, 0) + pw * (1 - r)
            part = nxt
        for ev, pw in part.items():
            dist[ev] = dist.get(ev, 0) + pw

    marg = []
    for i in range(G.n):
        m = private[i]
        for k, e in enumerate(edges):
            if i in e:
                m *= shared[k]
        marg.append(m)
    atoms = sorted(ev for ev, w in dist.items() if w > 0)
    space = FiniteSpace(G.n, tuple(Fraction(dist[ev]) for ev in atoms), tuple(atoms))
    return space, ProbVector(marg)
