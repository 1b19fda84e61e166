"""Coefficient tables over the subset lattice and the pivot-recursion DP.

Both the alternating sum q̆_S(p) and the independence polynomial Y_S(y)
obey ``T_A = T_{A-a} + s * w_a * T_{A \\ Γ⁺(a)}`` with ``s = -1`` and
``s = +1`` respectively, so one DP fills either table.

Exact tables hold integer numerators over a single positive ``scale``: with
weights ``w_i = num_i / den_i`` and ``scale = prod(den_i)``, every entry
``scale * T_S`` is an integer and each DP step is an exact integer division
(the entry ``T_B`` for ``a ∉ B`` only has denominators from ``B``).
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, full_set
from .numeric import EXACT, NumericPolicy, Scalar, sign as scalar_sign

#: Largest n for which a full 2^n table is built.
TABLE_CAP = 24


class ResourceLimitError(RuntimeError):
    """A request would exceed a configured size cap."""


class CoefficientTable:
    """Values indexed by every vertex set ``S ⊆ [n]`` (as bitmask).

    ``kind`` is ``"breve_q"``, ``"q"``, ``"Y"`` or ``"P"`` (probability that
    no event of ``S`` occurs, for finite spaces).
    """

    def __init__(self, kind: str, n: int, data, scale: int | None = None, elapsed: float = 0.0):
        if len(data) != 1 << n:
            raise ValueError(f"table for n={n} needs {1 << n} entries, got {len(data)}")
        if scale is not None and scale <= 0:
            raise ValueError("scale must be positive")
        self.kind = kind
        self.n = n
        self.data = data
        self.scale = scale
        self.elapsed = elapsed

    @property
    def exact(self) -> bool:
        return self.scale is not None

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, S: int) -> Scalar:
        if self.scale is None:
            return float(self.data[S])
        return Fraction(self.data[S], self.scale)

    def __iter__(self) -> Iterator[Scalar]:
        return (self[S] for S in range(len(self)))

    def items(self):
        return ((S, self[S]) for S in range(len(self)))

    def sign(self, S: int, policy: NumericPolicy = EXACT) -> int:
        if self.scale is not None:
            v = self.data[S]
            return (v > 0) - (v < 0)
        return scalar_sign(float(self.data[S]), policy)

    def first_negative(self, policy: NumericPolicy = EXACT) -> int | None:
        """Lowest-encoded S with a negative entry, or None."""
        if self.scale is not None:
            for S, v in enumerate(self.data):
                if v < 0:
                    return S
            return None
        bad = np.flatnonzero(self.data < -policy.epsilon)
        return int(bad[0]) if bad.size else None

    @property
    def full(self) -> Scalar:
        return self[len(self) - 1]


def check_table_size(n: int, cap: int = TABLE_CAP) -> None:
    if n > cap:
        raise ResourceLimitError(f"n={n} exceeds the table cap of {cap} vertices")


def pivot_table(G: Graph, weights: Sequence[Scalar], sgn: int, kind: str,
                policy: NumericPolicy = EXACT) -> CoefficientTable:
    """Fill ``T_∅ = 1``, ``T_A = T_{A-a} + sgn*w_a*T_{A∖Γ⁺(a)}``, a = min(A).

    Sets whose lowest member is ``a`` only depend on sets with members above
    ``a``, so pivots are processed from ``n-1`` down to ``0``.
    """
    n = G.n
    check_table_size(n)
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    full = full_set(n)
    size = 1 << n
    t0 = time.perf_counter()
    if policy.exact:
        w = [Fraction(x) for x in weights]
        scale = 1
        for x in w:
            scale *= x.denominator
        t = [0] * size
        t[0] = scale
        for a in range(n - 1, -1, -1):
            bit, step = 1 << a, 1 << (a + 1)
            keep = full & ~G.closed(a)
            num, den = sgn * w[a].numerator, w[a].denominator
            for base in range(0, size, step):
                t[base | bit] = t[base] + num * (t[base & keep] // den)
        return CoefficientTable(kind, n, t, scale, time.perf_counter() - t0)

    w = np.asarray([float(x) for x in weights])
    t = np.zeros(size)
    t[0] = 1.0
    for a in range(n - 1, -1, -1):
        bit, step = 1 << a, 1 << (a + 1)
        keep = full & ~G.closed(a)
        base = np.arange(0, size, step, dtype=np.int64)
        t[base | bit] = t[base] + sgn * w[a] * t[base & keep]
    return CoefficientTable(kind, n, t, None, time.perf_counter() - t0)


def ratio_chain_violation(num: CoefficientTable, den: CoefficientTable, complement: bool,
                          policy: NumericPolicy = EXACT) -> tuple[int, int] | None:
    """First ``(S, a)`` breaking ``num_S / num_{S-a} >= den_{f(S)} / den_{f(S-a)}``.

    ``f`` is set complement when ``complement`` is true, identity otherwise.
    Pairs whose denominators ``num_{S-a}`` or ``den_{f(S-a)}`` are not
    positive are skipped.  Comparisons are cross-multiplied; for exact tables
    the scales cancel, so raw integer numerators are compared.
    """
    n = num.n
    full = full_set(n)
    exact = num.exact and den.exact
    if exact:
        L, R = num.data, den.data
    else:
        L = [float(v) for v in num]
        R = [float(v) for v in den]
    for S in range(1, 1 << n):
        fS = full ^ S if complement else S
        rest = S
        while rest:
            bit = rest & -rest
            rest ^= bit
            T = S ^ bit
            fT = full ^ T if complement else T
            lt, rt = L[T], R[fT]
            if lt <= 0 or rt <= 0:
                continue
            lhs, rhs = L[S] * rt, R[fS] * lt
            if exact:
                if lhs < rhs:
                    return S, bit.bit_length() - 1
            elif lhs < rhs - policy.epsilon * max(1.0, abs(lhs), abs(rhs)):
                return S, bit.bit_length() - 1
    return None
