"""Independent certificate checker.

Verifies cofactor identities by direct multiplication, addition and point
evaluation.  This module must never import the standard-basis engine; its
whole value is that it audits engine output with none of the engine's
machinery (a structural test enforces this).
"""

from __future__ import annotations

from .certs import Cert
from .poly import Poly, evaluate


def check_certificate(cert: Cert, generators=None, point=None) -> bool:
    """Replay a certificate; True iff the identity and unit condition hold."""
    gens = tuple(generators) if generators is not None else cert.gens
    pt = point if point is not None else cert.point
    ring = cert.target.ring
    lhs = cert.unit * cert.target
    rhs = Poly.zero(ring)
    for idx, cof in cert.cofactors:
        if idx < 0 or idx >= len(gens):
            return False
        rhs = rhs + cof * gens[idx]
    if lhs != rhs:
        return False
    if pt is not None:
        if len(pt) != ring.arity:
            return False
        return evaluate(cert.unit, pt) != 0
    return cert.unit == Poly.const(ring, 1)
