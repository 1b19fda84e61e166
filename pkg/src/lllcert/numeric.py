"""Scalars in two modes: exact rationals and tolerance-aware floats.

Exact mode uses :class:`fractions.Fraction`; float mode uses 64-bit floats
and treats anything within ``epsilon`` of zero as zero.  Sign decisions on
alternating sums are only trustworthy in exact mode.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Sequence, Union

Scalar = Union[Fraction, float]

NEGATIVE, ZERO, POSITIVE = -1, 0, 1

DEFAULT_EPSILON = 1e-12


@dataclass(frozen=True)
class NumericPolicy:
    mode: str = "exact"
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.mode not in ("exact", "float"):
            raise ValueError(f"unknown numeric mode {self.mode!r}")
        if self.mode == "float" and not self.epsilon > 0:
            raise ValueError("epsilon must be positive in float mode")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def convert(self, x) -> Scalar:
        """Bring ``x`` (number or string) into this policy's mode."""
        if isinstance(x, str):
            x = parse_scalar(x)
        if self.exact:
            if isinstance(x, float) and not math.isfinite(x):
                raise ValueError(f"non-finite value {x}")
            return Fraction(x)
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x}")
        return x


EXACT = NumericPolicy("exact")
FLOAT = NumericPolicy("float")


def sign(x: Scalar, policy: NumericPolicy = EXACT) -> int:
    """-1, 0 or +1.  In float mode ``|x| <= epsilon`` counts as zero."""
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError(f"sign of non-finite value {x}")
    if policy.exact or isinstance(x, Rational):
        return (x > 0) - (x < 0)
    if abs(x) <= policy.epsilon:
        return ZERO
    return POSITIVE if x > 0 else NEGATIVE


def parse_scalar(text: str) -> Fraction:
    """Exact value of ``"a/b"``, an integer or a decimal string.

    ``"0.25"`` becomes ``1/4``; no binary rounding is involved.
    """
    s = text.strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse {text!r} as a rational number") from None


def format_scalar(x: Scalar):
    """JSON-ready form: ``"a/b"`` for rationals, a plain float otherwise."""
    if isinstance(x, Rational):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def rationalize(x: float, max_denominator: int = 10**12) -> Fraction:
    """Nearby rational with a small continued-fraction denominator."""
    return Fraction(x).limit_denominator(max_denominator)


def close(a: Scalar, b: Scalar, policy: NumericPolicy) -> bool:
    """Equality in exact mode; ``|a-b| <= eps * max(1, |a|, |b|)`` in float mode."""
    if policy.exact:
        return a == b
    return abs(a - b) <= policy.epsilon * max(1.0, abs(a), abs(b))


def parse_vector(doc, n: int, policy: NumericPolicy = EXACT) -> list[Scalar]:
    """Decode a probability/weight vector document.

    Accepts ``{"uniform": "a/b"}`` or ``{"values": [...]}`` (decoded or as
    JSON text).  Entries may be rational strings, decimal strings or numbers.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid vector JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ValueError("vector document must be a JSON object")
    if "uniform" in doc:
        return [_entry(doc["uniform"], policy)] * n
    if "values" in doc:
        values = doc["values"]
        if not isinstance(values, list) or len(values) != n:
            got = len(values) if isinstance(values, list) else type(values).__name__
            raise ValueError(f"'values' must be a list of length {n}, got {got}")
        return [_entry(v, policy) for v in values]
    raise ValueError("vector document needs a 'uniform' or 'values' key")


def _entry(v, policy: NumericPolicy) -> Scalar:
    if isinstance(v, bool) or not isinstance(v, (str, Real)):
        raise ValueError(f"bad vector entry {v!r}")
    if isinstance(v, float):
        # JSON floats are decimal literals; keep the written value exactly.
        v = repr(v)
    return policy.convert(v)


def common_scale(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integer numerators over one shared denominator (the lcm)."""
    scale = 1
    for v in values:
        scale = math.lcm(scale, v.denominator)
    return [v.numerator * (scale // v.denominator) for v in values], scale
