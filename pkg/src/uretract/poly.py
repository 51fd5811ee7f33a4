"""Exact sparse multivariate polynomials over Q.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients, tagged with its ring context.  All arithmetic is exact; there
is no floating point anywhere and coefficient content is never stripped, so
any identity built from these values replays bit-for-bit.

Values are immutable after construction and all operations are pure
functions, which makes every type in this module safe to share across
threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ArityMismatch, LimitExceeded
from .rings import Mono, Point, RingCtx, check_point

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Poly:
    """Immutable sparse polynomial: {exponent tuple -> nonzero Fraction}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingCtx, terms: Mapping[Mono, Fraction] | None = None,
                 _clean: bool = False):
        self.ring = ring
        if terms is None:
            self.terms: dict[Mono, Fraction] = {}
        elif _clean:
            self.terms = dict(terms)
        else:
            clean = {}
            for m, c in terms.items():
                if len(m) != ring.arity:
                    raise ArityMismatch(f"exponent tuple {m} in ring of arity {ring.arity}")
                c = Fraction(c)
                if c != 0:
                    clean[m] = c
            self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: RingCtx) -> "Poly":
        return Poly(ring, None)

    @staticmethod
    def const(ring: RingCtx, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(ring, None)
        return Poly(ring, {ring.zero_mono(): c}, _clean=True)

    @staticmethod
    def var(ring: RingCtx, i: int) -> "Poly":
        return Poly(ring, {ring.unit_mono(i): _ONE}, _clean=True)

    @staticmethod
    def term(ring: RingCtx, mono: Mono, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(ring, None)
        return Poly(ring, {mono: c}, _clean=True)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_coeff(self) -> Fraction:
        return self.terms.get(self.ring.zero_mono(), _ZERO)

    def coeff(self, mono: Mono) -> Fraction:
        return self.terms.get(mono, _ZERO)

    def is_const(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def support_vars(self) -> set[int]:
        used: set[int] = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.ring.names == other.ring.names
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .parsing import poly_to_text
        return poly_to_text(self)

    # -- arithmetic --------------------------------------------------------

    def _same_ring(self, other: "Poly") -> None:
        if self.ring.names != other.ring.names:
            raise ArityMismatch(f"mixed rings {self.ring.names} and {other.ring.names}")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_ring(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, _ZERO) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Poly(self.ring, res, _clean=True)

    def __sub__(self, other: "Poly") -> "Poly":
        self._same_ring(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, _ZERO) - c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Poly(self.ring, res, _clean=True)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring, {m: c * v for m, v in self.terms.items()}, _clean=True)

    def mul_term(self, mono: Mono, c) -> "Poly":
        """Multiply by a single term c*x^mono."""
        c = Fraction(c)
        if c == 0 or not self.terms:
            return Poly.zero(self.ring)
        return Poly(self.ring,
                    {tuple(a + b for a, b in zip(m, mono)): c * v
                     for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_ring(other)
        if not self.terms or not other.terms:
            return Poly.zero(self.ring)
        da, db = self.total_degree(), other.total_degree()
        if da + db > self.ring.degree_cap:
            raise LimitExceeded(
                f"product degree {da + db} exceeds ring degree cap {self.ring.degree_cap}")
        res: dict[Mono, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                s = res.get(m, _ZERO) + ca * cb
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Poly(self.ring, res, _clean=True)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k >>= 1
        return out


# -- module-level operations ------------------------------------------------


def evaluate(f: Poly, p: Point) -> Fraction:
    """Exact value of f at the point p."""
    check_point(p, f.ring)
    total = _ZERO
    # cache per-variable powers across terms
    powers: list[dict[int, Fraction]] = [{0: _ONE} for _ in range(f.ring.arity)]
    for m, c in f.terms.items():
        v = c
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                if e not in cache:
                    cache[e] = p[i] ** e
                v *= cache[e]
        total += v
    return total


def substitute(f: Poly, values: list[Poly], target: RingCtx | None = None) -> Poly:
    """Compose f with polynomial values for each of its variables."""
    if len(values) != f.ring.arity:
        raise ArityMismatch(f"{len(values)} values for arity {f.ring.arity}")
    tring = target if target is not None else (values[0].ring if values else f.ring)
    out = Poly.zero(tring)
    powers: list[dict[int, Poly]] = [{0: Poly.const(tring, 1)} for _ in values]
    for m, c in f.terms.items():
        acc = Poly.const(tring, c)
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                if e not in cache:
                    # build by repeated squaring off the cached ladder
                    cache[e] = values[i] ** e
                acc = acc * cache[e]
        out = out + acc
    return out


def translate(f: Poly, p: Point) -> Poly:
    """Return g with g(v) = f(v + p); an exact algebra automorphism."""
    check_point(p, f.ring)
    if all(c == 0 for c in p):
        return f
    values = [Poly.var(f.ring, i) + Poly.const(f.ring, p[i]) for i in range(f.ring.arity)]
    return substitute(f, values, f.ring)


def linear_change(f: Poly, matrix: list[list[Fraction]]) -> Poly:
    """Return f composed with the linear map A, i.e. x |-> f(A x).

    A must be an invertible square matrix over Q (checked by exact
    determinant).
    """
    from .linalg import det
    n = f.ring.arity
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ArityMismatch("matrix shape does not match ring arity")
    from .errors import SingularMatrix
    if det(matrix) == 0:
        raise SingularMatrix("coordinate change matrix is singular")
    values = []
    for i in range(n):
        row = Poly.zero(f.ring)
        for j in range(n):
            if matrix[i][j]:
                row = row + Poly.var(f.ring, j).scale(matrix[i][j])
        values.append(row)
    return substitute(f, values, f.ring)


def diff(f: Poly, i: int) -> Poly:
    """Partial derivative with respect to variable i."""
    res: dict[Mono, Fraction] = {}
    for m, c in f.terms.items():
        e = m[i]
        if e:
            dm = m[:i] + (e - 1,) + m[i + 1:]
            res[dm] = res.get(dm, _ZERO) + c * e
    return Poly(f.ring, res)


def inject(f: Poly, target: RingCtx, positions: list[int]) -> Poly:
    """Re-express f in a larger ring, variable i going to positions[i]."""
    if len(positions) != f.ring.arity:
        raise ArityMismatch("positions must list one target slot per source variable")
    res: dict[Mono, Fraction] = {}
    for m, c in f.terms.items():
        e = [0] * target.arity
        for i, exp in enumerate(m):
            if exp:
                e[positions[i]] = exp
        res[tuple(e)] = c
    return Poly(target, res, _clean=True)


def project(f: Poly, target: RingCtx, positions: list[int]) -> Poly:
    """Inverse of ``inject``: keep only the listed variables (others must be absent)."""
    keep = {pos: i for i, pos in enumerate(positions)}
    res: dict[Mono, Fraction] = {}
    for m, c in f.terms.items():
        e = [0] * target.arity
        for j, exp in enumerate(m):
            if exp:
                if j not in keep:
                    raise ArityMismatch(f"polynomial uses variable {f.ring.names[j]} outside projection")
                e[keep[j]] = exp
        res[tuple(e)] = c
    return Poly(target, res, _clean=True)


def poly_sum(ring_: RingCtx, items: Iterable[Poly]) -> Poly:
    total = Poly.zero(ring_)
    for it in items:
        total = total + it
    return total
