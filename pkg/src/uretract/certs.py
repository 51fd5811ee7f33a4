"""Cofactor certificates: the auditable output of every engine claim.

A certificate asserts the exact polynomial identity

    unit * target = sum_i cofactor_i * generators[index_i]

together with unit(point) != 0 when a point is attached (localized claims)
or unit == 1 when it is not.  Checking one takes plain polynomial
arithmetic only; see ``checker.check_certificate``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Poly
from .rings import Point


@dataclass(frozen=True)
class Cert:
    target: Poly
    unit: Poly
    cofactors: tuple[tuple[int, Poly], ...]   # (generator index, cofactor)
    point: Point | None = None
    gens: tuple[Poly, ...] = field(default=(), compare=False)  # carried context

    def with_gens(self, gens) -> "Cert":
        return Cert(self.target, self.unit, self.cofactors, self.point, tuple(gens))


@dataclass(frozen=True)
class LabeledCert:
    """A certificate plus the claim it backs, as stored in result bundles."""

    label: str
    cert: Cert
