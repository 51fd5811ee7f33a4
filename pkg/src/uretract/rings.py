"""Polynomial ring contexts and rational points.

A ring context is just an ordered tuple of distinct variable names over Q.
Monomials are plain exponent tuples (one natural number per variable) and
points are tuples of ``Fraction``; both live as bare tuples so they can be
used as dict keys without wrapper classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArityMismatch, InputError

Mono = tuple[int, ...]
Point = tuple[Fraction, ...]

# Total-degree guard for polynomial products; desk-scale safety net so a
# runaway basis computation raises instead of exhausting memory.
DEFAULT_DEGREE_CAP = 64


@dataclass(frozen=True)
class RingCtx:
    """An ordered list of distinct variable names; coefficients are always Q."""

    names: tuple[str, ...]
    degree_cap: int = field(default=DEFAULT_DEGREE_CAP, compare=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InputError(f"duplicate variable names: {self.names}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"variable {name!r} not in ring {self.names}") from None

    def zero_mono(self) -> Mono:
        return (0,) * self.arity

    def unit_mono(self, i: int) -> Mono:
        e = [0] * self.arity
        e[i] = 1
        return tuple(e)

    def extend(self, extra: tuple[str, ...], degree_cap: int | None = None) -> "RingCtx":
        return RingCtx(self.names + extra, degree_cap or self.degree_cap)

    def __repr__(self):
        return f"RingCtx({', '.join(self.names)})"


def ring(*names: str, degree_cap: int = DEFAULT_DEGREE_CAP) -> RingCtx:
    return RingCtx(tuple(names), degree_cap)


def point(*coords, arity: int | None = None) -> Point:
    """Coerce coordinates (ints, strings like ``-1/2``, Fractions) to a Point."""
    p = tuple(Fraction(c) for c in coords)
    if arity is not None and len(p) != arity:
        raise ArityMismatch(f"point has {len(p)} coordinates, expected {arity}")
    return p


def origin(n: int) -> Point:
    return (Fraction(0),) * n


def check_point(p: Point, ring_: RingCtx) -> Point:
    if len(p) != ring_.arity:
        raise ArityMismatch(f"point arity {len(p)} != ring arity {ring_.arity}")
    return p
