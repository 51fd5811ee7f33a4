"""Block monomial orderings: global, local, and mixed.

An ``OrderSpec`` partitions the ring variables into ordered blocks, each
carrying one of four semigroup orders.  Within a block:

  degrevlex        1 < x, higher total degree wins, revlex tie break
  lex              1 < x, leftmost differing exponent wins
  local_degrevlex  1 > x, lower total degree wins, revlex tie break
  local_lex        1 > x, leftmost differing exponent, smaller wins

Blocks are compared left to right, so an earlier block dominates.  Every
kind is strictly monotone under monomial multiplication, which is what the
division algorithms rely on.  The order is a well-ordering exactly when all
blocks are global.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import ArityMismatch, InputError
from .rings import Mono, RingCtx

GLOBAL_KINDS = ("degrevlex", "lex")
LOCAL_KINDS = ("local_degrevlex", "local_lex")
KINDS = GLOBAL_KINDS + LOCAL_KINDS

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class OrderBlock:
    vars: tuple[int, ...]   # variable indices, in ring order
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown order kind {self.kind!r}")

    @property
    def is_global(self) -> bool:
        return self.kind in GLOBAL_KINDS


@dataclass(frozen=True)
class OrderSpec:
    arity: int
    blocks: tuple[OrderBlock, ...]

    def __post_init__(self):
        seen: list[int] = []
        for b in self.blocks:
            seen.extend(b.vars)
        if sorted(seen) != list(range(self.arity)):
            raise InputError("order blocks must partition the ring variables")

    @property
    def is_global(self) -> bool:
        return all(b.is_global for b in self.blocks)

    @property
    def is_local(self) -> bool:
        return all(not b.is_global for b in self.blocks)

    def compare(self, a: Mono, b: Mono) -> int:
        """Strict total order; returns LT, EQ or GT comparing a with b."""
        if len(a) != self.arity or len(b) != self.arity:
            raise ArityMismatch("monomial arity does not match order")
        for block in self.blocks:
            c = _compare_block(block, a, b)
            if c:
                return c
        return EQ

    def greater(self, a: Mono, b: Mono) -> bool:
        return self.compare(a, b) == GT

    def sort_key(self):
        """Key function sorting monomials ascending in this order."""
        return functools.cmp_to_key(self.compare)


def _compare_block(block: OrderBlock, a: Mono, b: Mono) -> int:
    av = [a[i] for i in block.vars]
    bv = [b[i] for i in block.vars]
    if av == bv:
        return EQ
    kind = block.kind
    if kind == "lex":
        for x, y in zip(av, bv):
            if x != y:
                return GT if x > y else LT
        return EQ
    if kind == "local_lex":
        for x, y in zip(av, bv):
            if x != y:
                return GT if x < y else LT
        return EQ
    da, db = sum(av), sum(bv)
    if kind == "degrevlex" and da != db:
        return GT if da > db else LT
    if kind == "local_degrevlex" and da != db:
        return GT if da < db else LT
    # revlex tie break: last differing exponent, smaller exponent wins
    for x, y in zip(reversed(av), reversed(bv)):
        if x != y:
            return GT if x < y else LT
    return EQ


# -- constructors -------------------------------------------------------------


def degrevlex(ring: RingCtx) -> OrderSpec:
    return OrderSpec(ring.arity, (OrderBlock(tuple(range(ring.arity)), "degrevlex"),))


def lex(ring: RingCtx) -> OrderSpec:
    return OrderSpec(ring.arity, (OrderBlock(tuple(range(ring.arity)), "lex"),))


def local_order(ring: RingCtx) -> OrderSpec:
    """Local degrevlex on all variables: the ordering of germs at the origin."""
    return OrderSpec(ring.arity, (OrderBlock(tuple(range(ring.arity)), "local_degrevlex"),))


def block_order(ring: RingCtx, *groups: tuple[tuple[int, ...], str]) -> OrderSpec:
    return OrderSpec(ring.arity, tuple(OrderBlock(tuple(v), k) for v, k in groups))


def elimination_order(ring: RingCtx, drop: tuple[int, ...]) -> OrderSpec:
    """Global order eliminating the ``drop`` variables (their block first)."""
    drop_t = tuple(sorted(drop))
    keep_t = tuple(i for i in range(ring.arity) if i not in set(drop_t))
    blocks = []
    if drop_t:
        blocks.append(OrderBlock(drop_t, "degrevlex"))
    if keep_t:
        blocks.append(OrderBlock(keep_t, "degrevlex"))
    return OrderSpec(ring.arity, tuple(blocks))


ORDER_NAMES = {
    "degrevlex": degrevlex,
    "lex": lex,
    "local": local_order,
}
