"""Deterministic random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from poissonore import Derivation, GaussRat, Poly


def rand_gauss(rng: random.Random, span: int = 4, imag: bool = True) -> GaussRat:
    re = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    im = Fraction(rng.randint(-span, span), rng.randint(1, 3)) if imag and rng.random() < 0.3 else Fraction(0)
    return GaussRat(re, im)


def rand_poly(
    rng: random.Random,
    ring: tuple[str, ...],
    deg: int,
    terms: int = 4,
    span: int = 3,
    imag: bool = False,
) -> Poly:
    acc: dict[tuple[int, ...], GaussRat] = {}
    for _ in range(terms):
        e = [0] * len(ring)
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(len(ring))] += 1
        c = rand_gauss(rng, span, imag)
        key = tuple(e)
        acc[key] = acc.get(key, GaussRat()) + c
    return Poly(ring, {e: c for e, c in acc.items() if c})


def rand_nonzero_poly(
    rng: random.Random,
    ring: tuple[str, ...],
    deg: int,
    terms: int = 4,
    span: int = 3,
    imag: bool = False,
) -> Poly:
    while True:
        p = rand_poly(rng, ring, deg, terms, span, imag)
        if p:
            return p


def rand_derivation(rng: random.Random, ring: tuple[str, ...], deg: int = 2) -> Derivation:
    return Derivation(ring, {v: rand_poly(rng, ring, deg, terms=3) for v in ring})
