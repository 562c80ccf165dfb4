"""Buchberger's algorithm, normal forms, and ideal presentations.

Reduced Groebner bases are the workhorse for every ideal question in
this package: membership, equality, containment, elimination.  The
implementation is the plain Buchberger loop with the normal selection
strategy and the coprimality criterion; bases are fully autoreduced,
monic, and sorted, so identical inputs give identical bases on every
run.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import (
    GREVLEX,
    MonomialOrder,
    Poly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    render,
)
from .scalars import GaussRat


def reduce_full(p: Poly, basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of p after full reduction by basis (every term reduced)."""
    if not basis:
        return p
    lead = [(g.leading_monomial(order), g.leading_coeff(order), g) for g in basis if g]
    remainder = Poly.zero(p.ring)
    work = p
    while work:
        e, c = work.leading_term(order)
        for lm, lc, g in lead:
            if mono_divides(lm, e):
                work = work - Poly(p.ring, {mono_div(e, lm): c / lc}) * g
                break
        else:
            t = Poly(p.ring, {e: c})
            remainder = remainder + t
            work = work - t
    return remainder


def _s_poly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    l = mono_lcm(lf, lg)
    tf = Poly(f.ring, {mono_div(l, lf): cf.inverse()})
    tg = Poly(g.ring, {mono_div(l, lg): cg.inverse()})
    return tf * f - tg * g


def buchberger(gens: Sequence[Poly], order: MonomialOrder = GREVLEX) -> list[Poly]:
    basis = [g.monic(order) for g in gens if g]
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    lms = [g.leading_monomial(order) for g in basis]
    while pairs:
        # normal selection: smallest lcm first, index pair breaking ties
        i, j = min(
            pairs,
            key=lambda ij: (order.key(mono_lcm(lms[ij[0]], lms[ij[1]])), ij),
        )
        pairs.discard((i, j))
        li, lj = lms[i], lms[j]
        if mono_lcm(li, lj) == mono_mul(li, lj):  # coprime leading monomials
            continue
        s = reduce_full(_s_poly(basis[i], basis[j], order), basis, order)
        if s:
            s = s.monic(order)
            basis.append(s)
            lms.append(s.leading_monomial(order))
            k = len(basis) - 1
            pairs.update((k, t) for t in range(k))
    return basis


def autoreduce(basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> list[Poly]:
    work = [g for g in basis if g]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            g = work[i]
            if not g:
                continue
            rest = [h for k, h in enumerate(work) if k != i and h]
            r = reduce_full(g, rest, order)
            if r != g:
                work[i] = r
                changed = True
        work = [g for g in work if g]
    out = sorted(
        (g.monic(order) for g in work),
        key=lambda g: order.key(g.leading_monomial(order)),
        reverse=True,
    )
    return out


def groebner_basis(gens: Sequence[Poly], order: MonomialOrder = GREVLEX) -> list[Poly]:
    """The reduced Groebner basis of the ideal generated by gens."""
    return autoreduce(buchberger(gens, order), order)


class IdealPres:
    """An ideal of a polynomial ring, given by generators.

    Reduced bases are computed on demand and cached per order tag; the
    cache is an internal memo only, instances behave as immutable.
    """

    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring: tuple[str, ...], generators: Iterable[Poly]):
        gens = []
        for g in generators:
            if g.ring != ring:
                g = g.embed(ring)
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_bases", {})

    def __setattr__(self, name, value):
        raise AttributeError("IdealPres is immutable")

    def basis(self, order: MonomialOrder = GREVLEX) -> list[Poly]:
        cached = self._bases.get(order.tag)
        if cached is None:
            cached = groebner_basis(self.generators, order)
            for g in self.generators:  # the cache must present the same ideal
                if reduce_full(g, cached, order):
                    raise ArithmeticError("basis does not reduce its own generators")
            self._bases[order.tag] = cached
        return cached

    def normal_form(self, p: Poly, order: MonomialOrder = GREVLEX) -> Poly:
        return reduce_full(p.embed(self.ring), self.basis(order), order)

    def contains_poly(self, p: Poly, order: MonomialOrder = GREVLEX) -> bool:
        return self.normal_form(p, order).is_zero()

    def contains_ideal(self, other: "IdealPres", order: MonomialOrder = GREVLEX) -> bool:
        return all(self.contains_poly(g, order) for g in other.generators)

    def same_ideal(self, other: "IdealPres", order: MonomialOrder = GREVLEX) -> bool:
        return self.basis(order) == other.basis(order)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self, order: MonomialOrder = GREVLEX) -> bool:
        b = self.basis(order)
        return len(b) == 1 and b[0].is_constant()

    def basis_strings(self, order: MonomialOrder = GREVLEX) -> tuple[str, ...]:
        return tuple(render(g, order) for g in self.basis(order))

    def __eq__(self, other):
        if not isinstance(other, IdealPres):
            return NotImplemented
        return self.ring == other.ring and self.same_ideal(other)

    def __hash__(self):
        return hash((self.ring, tuple(self.basis())))

    def __repr__(self):
        gens = ", ".join(render(g) for g in self.generators) or "0"
        return f"<ideal ({gens})>"


def normal_form(p: Poly, ideal: IdealPres, order: MonomialOrder = GREVLEX) -> Poly:
    """Unique remainder of p modulo the ideal; zero exactly on members."""
    return ideal.normal_form(p, order)
