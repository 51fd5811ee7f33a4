"""Standard bases for global, local and mixed orderings.

One reduction primitive serves everything: Mora's weak normal form with
smallest-ecart selection.  For a well-ordering it degenerates into ordinary
polynomial division with unit 1 and a fully reduced remainder; for local or
mixed orderings it produces an identity

    u * f = sum_i c_i * g_i + nf,        u = 1 + (terms below 1),

whose unit u never vanishes at the origin, deciding membership in the
localized ideal.  The Buchberger loop on top tracks how every basis element
is written in terms of the input generators so that each answer ships with
a replayable cofactor certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certs import Cert
from .errors import InputError, LimitExceeded
from .orders import OrderSpec
from .poly import Poly
from .rings import Mono, Point, RingCtx
from .poly import translate

DEFAULT_STEP_CAP = 200_000
DEFAULT_PAIR_CAP = 4_000


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_sub(b: Mono, a: Mono) -> Mono:
    return tuple(x - y for x, y in zip(b, a))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_mono(f: Poly, order: OrderSpec) -> Mono:
    it = iter(f.terms)
    best = next(it)
    for m in it:
        if order.compare(m, best) > 0:
            best = m
    return best


def ecart(f: Poly, lm: Mono) -> int:
    """Total degree spread between the polynomial and its leading monomial."""
    return f.total_degree() - sum(lm)


class _Entry:
    """A reducer available to the Mora loop.

    Generators carry their index; stored intermediate results carry the
    (unit, cofactor) decomposition they had when recorded.
    """

    __slots__ = ("poly", "lm", "lc", "ec", "gen_idx", "unit", "cof")

    def __init__(self, poly, lm, ec, gen_idx=None, unit=None, cof=None):
        self.poly = poly
        self.lm = lm
        self.lc = poly.terms[lm]
        self.ec = ec
        self.gen_idx = gen_idx
        self.unit = unit
        self.cof = cof


def weak_nf(f: Poly, gens: list[Poly], order: OrderSpec, *,
            step_cap: int = DEFAULT_STEP_CAP) -> tuple[Poly, Poly, list[Poly]]:
    """Mora weak normal form of f against gens.

    Returns (nf, u, cofactors) with the exact identity
    u*f = sum cofactors[i]*gens[i] + nf.  For a global ordering u is 1 and
    no term of nf is divisible by a generator leading monomial; otherwise
    the guarantee is on the leading monomial of nf.
    """
    ring = f.ring
    one = Poly.const(ring, 1)
    is_global = order.is_global
    u = one
    cof = [Poly.zero(ring) for _ in gens]
    table: list[_Entry] = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        lm = leading_mono(g, order)
        table.append(_Entry(g, lm, ecart(g, lm), gen_idx=j))
    h = f
    tail = Poly.zero(ring)   # fully reduced remainder terms (global only)
    steps = 0
    while not h.is_zero():
        lm_h = leading_mono(h, order)
        chosen = None
        chosen_key = None
        for k, entry in enumerate(table):
            if mono_divides(entry.lm, lm_h):
                key = (entry.ec, k)
                if chosen is None or key < chosen_key:
                    chosen, chosen_key = entry, key
        if chosen is None:
            if not is_global:
                break
            lt = Poly.term(ring, lm_h, h.terms[lm_h])
            tail = tail + lt
            h = h - lt
            continue
        steps += 1
        if steps > step_cap:
            raise LimitExceeded(f"normal form exceeded {step_cap} reduction steps")
        ec_h = ecart(h, lm_h)
        if not is_global and chosen.ec > ec_h:
            table.append(_Entry(h, lm_h, ec_h, unit=u, cof=list(cof)))
        mult = Poly.term(ring, mono_sub(lm_h, chosen.lm), h.terms[lm_h] / chosen.lc)
        h = h - mult * chosen.poly
        if chosen.gen_idx is not None:
            cof[chosen.gen_idx] = cof[chosen.gen_idx] + mult
        else:
            u = u - mult * chosen.unit
            cof = [c - mult * ct for c, ct in zip(cof, chosen.cof)]
    return tail + h, u, cof


@dataclass(frozen=True)
class StdBasis:
    """Standard basis with the transformation back to the input generators."""

    generators: tuple[Poly, ...]
    order: OrderSpec
    reduced: bool
    input_gens: tuple[Poly, ...]
    reps: tuple[tuple[Poly, ...], ...]   # generators[i] = sum_j reps[i][j]*input_gens[j]

    @property
    def ring(self) -> RingCtx:
        return self.input_gens[0].ring if self.input_gens else self.generators[0].ring

    def leading_monos(self) -> tuple[Mono, ...]:
        return tuple(leading_mono(g, self.order) for g in self.generators)


def spoly(f: Poly, g: Poly, order: OrderSpec) -> Poly:
    lf, lg = leading_mono(f, order), leading_mono(g, order)
    lcm = mono_lcm(lf, lg)
    mf = Poly.term(f.ring, mono_sub(lcm, lf), 1 / f.terms[lf])
    mg = Poly.term(g.ring, mono_sub(lcm, lg), 1 / g.terms[lg])
    return mf * f - mg * g


def std_basis(gens: list[Poly], order: OrderSpec, *,
              pair_cap: int = DEFAULT_PAIR_CAP,
              step_cap: int = DEFAULT_STEP_CAP) -> StdBasis:
    """Buchberger loop with weak_nf as the reduction step.

    Accepts any mix of global/local blocks; the result is the reduced
    Groebner basis when the ordering is global, and a minimal monic
    standard basis otherwise.
    """
    input_gens = tuple(gens)
    if not input_gens:
        return StdBasis((), order, order.is_global, (), ())
    ring = input_gens[0].ring
    basis: list[Poly] = []
    reps: list[list[Poly]] = []

    def unit_rep(j: int) -> list[Poly]:
        return [Poly.const(ring, 1 if k == j else 0) for k in range(len(input_gens))]

    for j, g in enumerate(input_gens):
        if g.is_zero():
            continue
        lc = g.terms[leading_mono(g, order)]
        basis.append(g.scale(1 / lc))
        reps.append([p.scale(1 / lc) for p in unit_rep(j)])
    if not basis:
        return StdBasis((), order, order.is_global, input_gens, ())

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    lms = [leading_mono(g, order) for g in basis]
    processed = 0
    while pairs:
        processed += 1
        if processed > pair_cap:
            raise LimitExceeded(f"Buchberger pair cap {pair_cap} exceeded")
        i, j = min(pairs, key=lambda ij: (sum(mono_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        if order.is_global and lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue   # product criterion: coprime leading monomials
        mi = Poly.term(ring, mono_sub(lcm, lms[i]), 1 / basis[i].terms[lms[i]])
        mj = Poly.term(ring, mono_sub(lcm, lms[j]), 1 / basis[j].terms[lms[j]])
        s = mi * basis[i] - mj * basis[j]
        if s.is_zero():
            continue
        rep_s = [mi * a - mj * b for a, b in zip(reps[i], reps[j])]
        nf, u, cof = weak_nf(s, basis, order, step_cap=step_cap)
        if nf.is_zero():
            continue
        rep_nf = [u * rs for rs in rep_s]
        for k, ck in enumerate(cof):
            if not ck.is_zero():
                rep_nf = [rn - ck * rk for rn, rk in zip(rep_nf, reps[k])]
        lc = nf.terms[leading_mono(nf, order)]
        nf = nf.scale(1 / lc)
        rep_nf = [p.scale(1 / lc) for p in rep_nf]
        basis.append(nf)
        reps.append(rep_nf)
        lms.append(leading_mono(nf, order))
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))

    # drop elements whose leading monomial is divisible by another's
    keep: list[int] = []
    for i in range(len(basis)):
        redundant = False
        for j in range(len(basis)):
            if i == j:
                continue
            if mono_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    basis = [basis[i] for i in keep]
    reps = [reps[i] for i in keep]
    lms = [lms[i] for i in keep]

    if order.is_global:
        # tail-interreduce: leading monomials are pairwise non-divisible, so
        # one pass against the others yields the unique reduced basis
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            nf, _, cof = weak_nf(basis[i], others, order, step_cap=step_cap)
            rep_i = list(reps[i])
            for k, ck in enumerate(cof):
                if not ck.is_zero():
                    src = k if k < i else k + 1
                    rep_i = [rn - ck * rk for rn, rk in zip(rep_i, reps[src])]
            basis[i] = nf
            reps[i] = rep_i

    def lm_sort_key(idx):
        return order.sort_key()(lms[idx])

    ordering = sorted(range(len(basis)), key=lm_sort_key, reverse=True)
    basis = [basis[i] for i in ordering]
    reps = [reps[i] for i in ordering]
    return StdBasis(tuple(basis), order, order.is_global, input_gens,
                    tuple(tuple(r) for r in reps))


def mora_weak_nf(f: Poly, basis: StdBasis, *,
                 step_cap: int = DEFAULT_STEP_CAP) -> tuple[Poly, Cert]:
    """Weak normal form of f against a standard basis, with certificate.

    The certificate states u*f = sum c_i*input_gens[i] (+ 1*nf when the
    normal form is nonzero; the remainder is appended to the generator
    context so the identity replays as-is).
    """
    nf, u, cof = weak_nf(f, list(basis.generators), basis.order, step_cap=step_cap)
    ring = f.ring
    folded = [Poly.zero(ring) for _ in basis.input_gens]
    for k, ck in enumerate(cof):
        if ck.is_zero():
            continue
        for j, rkj in enumerate(basis.reps[k]):
            if not rkj.is_zero():
                folded[j] = folded[j] + ck * rkj
    cofactors = [(j, cj) for j, cj in enumerate(folded) if not cj.is_zero()]
    gens_ctx = list(basis.input_gens)
    if not nf.is_zero():
        gens_ctx.append(nf)
        cofactors.append((len(gens_ctx) - 1, Poly.const(ring, 1)))
    cert = Cert(target=f, unit=u, cofactors=tuple(cofactors), point=None,
                gens=tuple(gens_ctx))
    return nf, cert


def member(f: Poly, gens: list[Poly], order: OrderSpec,
           p: Point | None = None, *,
           step_cap: int = DEFAULT_STEP_CAP,
           pair_cap: int = DEFAULT_PAIR_CAP) -> Cert | None:
    """Ideal membership, localized at p when given.

    Returns a replayable certificate u*f = sum c_i*gens[i] with u(p) != 0
    (u = 1 for global orderings), or None when f is not a member.  With a
    point the ordering must be local so that non-membership conclusions are
    sound for the localization.
    """
    if p is not None:
        if order.is_global:
            raise InputError("localized membership needs a local (or mixed-local) order")
        work_gens = [translate(g, p) for g in gens]
        work_f = translate(f, p)
    else:
        work_gens = list(gens)
        work_f = f
    basis = std_basis(work_gens, order, pair_cap=pair_cap, step_cap=step_cap)
    nf, cert = mora_weak_nf(work_f, basis, step_cap=step_cap)
    if not nf.is_zero():
        return None
    if p is None:
        return cert.with_gens(gens)
    neg = tuple(-c for c in p)
    cofactors = tuple((j, translate(c, neg)) for j, c in cert.cofactors)
    return Cert(target=f, unit=translate(cert.unit, neg), cofactors=cofactors,
                point=p, gens=tuple(gens))
