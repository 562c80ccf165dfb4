"""Skew-polynomial arithmetic and the semiclassical limit."""

from __future__ import annotations

import random

import pytest

from conftest import rand_derivation, rand_poly
from poissonore import (
    DeltaBracket,
    IdealPres,
    Poly,
    SkewPoly,
    commutator,
    derivation,
    extended_ideal_stable,
    parse_poly,
    quantize,
    render,
    semiclassical_bracket,
    specialize_classical,
    unquantize,
)

BASE = ("x", "y")


def _gwj():
    return derivation(BASE, x=parse_poly("2*y", BASE), y=parse_poly("y^2 + x", BASE))


def _weyl():
    return derivation(("x",), x=Poly.one(("x",)))


def _rand_skew(rng, twist, zdeg=3, cdeg=2):
    coeffs = [rand_poly(rng, twist.ring, cdeg, terms=3) for _ in range(zdeg + 1)]
    return sum(
        (SkewPoly.from_base(twist, c) * SkewPoly.z(twist) ** k for k, c in enumerate(coeffs)),
        SkewPoly.from_base(twist, Poly.zero(twist.ring)),
    )


def test_weyl_relation():
    d = _weyl()
    z = SkewPoly.z(d)
    x = SkewPoly.from_base(d, Poly.var(("x",), "x"))
    assert render((z * x).to_poly()) == "x*z + 1"
    assert render(commutator(z, x).to_poly()) == "1"
    assert render((x * z).to_poly()) == "x*z"


def test_left_normal_form():
    d = _gwj()
    z = SkewPoly.z(d)
    y = SkewPoly.from_base(d, Poly.var(BASE, "y"))
    p = z * z * y
    # z^2 y = y z^2 + 2 d(y) z + d(d(y))
    dy = d.image("y")
    expected = (
        SkewPoly.from_base(d, Poly.var(BASE, "y")) * z * z
        + SkewPoly.from_base(d, dy * 2) * z
        + SkewPoly.from_base(d, d.apply(dy))
    )
    assert p.to_poly() == expected.to_poly()


def test_to_poly_roundtrip():
    d = _gwj()
    rng = random.Random(801)
    for _ in range(30):
        u = _rand_skew(rng, d)
        assert SkewPoly.from_poly(d, u.to_poly()).to_poly() == u.to_poly()


def test_associativity_random():
    rng = random.Random(802)
    d = _gwj()
    for _ in range(25):
        u = _rand_skew(rng, d, zdeg=2, cdeg=1)
        v = _rand_skew(rng, d, zdeg=2, cdeg=1)
        w = _rand_skew(rng, d, zdeg=2, cdeg=1)
        assert ((u * v) * w).to_poly() == (u * (v * w)).to_poly()
        assert ((u + v) * w).to_poly() == (u * w + v * w).to_poly()


def test_commutator_identities():
    rng = random.Random(803)
    d = _gwj()
    for _ in range(15):
        u = _rand_skew(rng, d, zdeg=2, cdeg=1)
        v = _rand_skew(rng, d, zdeg=2, cdeg=1)
        assert commutator(u, u).to_poly().is_zero()
        assert commutator(u, v).to_poly() == -commutator(v, u).to_poly()


def test_quantize_shape():
    d = _gwj()
    twist = quantize(d)
    assert twist.ring == ("x", "y", "h")
    h = Poly.var(twist.ring, "h")
    assert twist.image("x") == h * parse_poly("2*y", twist.ring)
    assert twist.image("h").is_zero()
    assert unquantize(twist) == d
    with pytest.raises(ValueError):
        quantize(derivation(("x", "h"), x=Poly.one(("x", "h")), h=Poly.zero(("x", "h"))))


def test_unquantize_rejects_bad_twists():
    d = _gwj()
    dh = d.extend_zero("h")
    # not divisible by h
    with pytest.raises(ValueError):
        unquantize(dh)


def test_semiclassical_matches_bracket():
    rng = random.Random(804)
    for delta in (_weyl(), _gwj()):
        twist = quantize(delta)
        structure = DeltaBracket(delta)
        for _ in range(40):
            u = _rand_skew(rng, twist, zdeg=3, cdeg=2)
            v = _rand_skew(rng, twist, zdeg=3, cdeg=2)
            sc = semiclassical_bracket(u, v)
            ubar = u.to_poly().substitute("h", 0)
            vbar = v.to_poly().substitute("h", 0)
            assert sc == structure.bracket(ubar, vbar)


def test_specialize_classical():
    d = _gwj()
    twist = quantize(d)
    rng = random.Random(805)
    u = _rand_skew(rng, twist, zdeg=2, cdeg=1)
    v = _rand_skew(rng, twist, zdeg=2, cdeg=1)
    # at h = 0 multiplication is commutative
    assert specialize_classical(u * v) == specialize_classical(u) * specialize_classical(v)


def test_extended_ideal_stable():
    d = _gwj()
    dz = d.extend_zero("z")
    ring = dz.ring
    good = IdealPres(ring, [parse_poly("y^2 + x + 1", ring)])
    check = extended_ideal_stable(good, dz)
    assert check
    bad = IdealPres(ring, [parse_poly("x", ring)])
    check = extended_ideal_stable(bad, dz)
    assert not check
    assert check.generator is not None and check.residue is not None
