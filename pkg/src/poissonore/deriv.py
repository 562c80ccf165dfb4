"""Derivations of polynomial rings, stored by their generator images."""

from __future__ import annotations

from typing import Mapping

from .polycore import GaussRat, IdealPres, Poly
from .polycore.poly import GREVLEX, MonomialOrder


class DerivationError(ValueError):
    pass


class Derivation:
    """A derivation d of QQ(i)[ring], determined by d(v) for each v.

    Images may cover only part of the ring; applying to a polynomial
    that uses an unimaged variable is an error rather than a guess.
    """

    __slots__ = ("ring", "images")

    def __init__(self, ring: tuple[str, ...], images: Mapping[str, Poly]):
        imgs = {}
        for v, p in images.items():
            if v not in ring:
                raise DerivationError(f"image given for {v!r}, not a ring variable")
            imgs[v] = p.embed(ring)
        object.__setattr__(self, "ring", tuple(ring))
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Derivation is immutable")

    def image(self, v: str) -> Poly:
        try:
            return self.images[v]
        except KeyError:
            raise DerivationError(f"no image for variable {v!r}") from None

    def apply(self, p: Poly) -> Poly:
        """d(p) = sum over variables of d(v) * dp/dv (the Leibniz extension)."""
        p = p.embed(self.ring)
        out = Poly.zero(self.ring)
        for v in p.used_vars():
            out = out + self.image(v) * p.partial(v)
        return out

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.images.values())

    def max_image_degree(self) -> int:
        """Largest total degree among images; -1 if all are zero."""
        if not self.images:
            return -1
        return max(p.total_degree() for p in self.images.values())

    def extend_zero(self, var: str) -> "Derivation":
        """The same derivation on ring + (var,), with d(var) = 0."""
        if var in self.ring:
            raise DerivationError(f"{var!r} already in ring")
        ring2 = self.ring + (var,)
        imgs = {v: p.embed(ring2) for v, p in self.images.items()}
        imgs[var] = Poly.zero(ring2)
        return Derivation(ring2, imgs)

    def scale(self, c: "Poly | GaussRat | int") -> "Derivation":
        return Derivation(self.ring, {v: p * c for v, p in self.images.items()})

    def induced_on_quotient(self, ideal: IdealPres) -> "QuotientDerivation":
        """The derivation induced on ring/ideal; the ideal must be stable."""
        from .spectra import is_delta_ideal

        check = is_delta_ideal(ideal, self)
        if not check:
            raise DerivationError(
                f"ideal is not stable: d({check.generator!r}) has nonzero "
                f"normal form {check.residue!r}"
            )
        return QuotientDerivation(self, ideal)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __repr__(self):
        body = ", ".join(f"{v} -> {p!r}" for v, p in sorted(self.images.items()))
        return f"<derivation {body}>"


class QuotientDerivation:
    """Action of a stable derivation on normal-form representatives."""

    __slots__ = ("derivation", "ideal", "order")

    def __init__(
        self, derivation: Derivation, ideal: IdealPres, order: MonomialOrder = GREVLEX
    ):
        object.__setattr__(self, "derivation", derivation)
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientDerivation is immutable")

    def apply(self, p: Poly) -> Poly:
        return self.ideal.normal_form(self.derivation.apply(p), self.order)


def derivation(ring: tuple[str, ...], **images: Poly) -> Derivation:
    return Derivation(ring, images)
