"""Sparse multivariate polynomials over QQ(i), with monomial orders.

A ring is just an ordered tuple of variable names; exponent vectors are
tuples aligned with it.  Polynomials are immutable once built and keep a
canonical term map (no zero coefficients), so structural equality is
mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .scalars import GaussRat, ONE, ZERO

Expvec = tuple[int, ...]
Coeff = Union[GaussRat, int, Fraction]

# precedence of the named ring variables; internal/auxiliary variables
# sort after these, alphabetically
_CANON = {"x": 0, "y": 1, "z": 2, "h": 3}


def canonical_ring(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=lambda v: (_CANON.get(v, len(_CANON)), v)))


# -- monomial orders ---------------------------------------------------


class MonomialOrder:
    """Total order on exponent vectors, exposed as a sort key."""

    tag: str

    def key(self, e: Expvec) -> tuple:
        raise NotImplementedError


class Grevlex(MonomialOrder):
    tag = "grevlex"

    def key(self, e: Expvec) -> tuple:
        return (sum(e),) + tuple(-x for x in reversed(e))


class Lex(MonomialOrder):
    tag = "lex"

    def key(self, e: Expvec) -> tuple:
        return e


class BlockElim(MonomialOrder):
    """Grevlex on a leading block of variables, then grevlex on the rest.

    Any monomial touching the leading block exceeds every monomial that
    does not, which is what elimination needs.
    """

    def __init__(self, head: int):
        self.head = head
        self.tag = f"elim:{head}"

    def key(self, e: Expvec) -> tuple:
        a, b = e[: self.head], e[self.head :]
        return (
            (sum(a),)
            + tuple(-x for x in reversed(a))
            + (sum(b),)
            + tuple(-x for x in reversed(b))
        )


GREVLEX = Grevlex()
LEX = Lex()

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def order_by_tag(tag: str) -> MonomialOrder:
    try:
        return _ORDERS[tag]
    except KeyError:
        raise ValueError(f"unknown monomial order {tag!r}") from None


def mono_divides(a: Expvec, b: Expvec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Expvec, b: Expvec) -> Expvec:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: Expvec, b: Expvec) -> Expvec:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Expvec, b: Expvec) -> Expvec:
    return tuple(max(x, y) for x, y in zip(a, b))


# -- polynomials -------------------------------------------------------


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: tuple[str, ...], terms: Mapping[Expvec, Coeff]):
        cleaned: dict[Expvec, GaussRat] = {}
        for e, c in terms.items():
            c = GaussRat.coerce(c)
            if c:
                cleaned[tuple(e)] = c
        object.__setattr__(self, "ring", tuple(ring))
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(ring: tuple[str, ...]) -> "Poly":
        return Poly(ring, {})

    @staticmethod
    def constant(ring: tuple[str, ...], c: Coeff) -> "Poly":
        return Poly(ring, {(0,) * len(ring): GaussRat.coerce(c)})

    @staticmethod
    def one(ring: tuple[str, ...]) -> "Poly":
        return Poly.constant(ring, 1)

    @staticmethod
    def var(ring: tuple[str, ...], name: str) -> "Poly":
        i = ring.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(ring)))
        return Poly(ring, {e: ONE})

    @staticmethod
    def monomial(ring: tuple[str, ...], exps: Mapping[str, int], c: Coeff = 1) -> "Poly":
        e = tuple(exps.get(v, 0) for v in ring)
        return Poly(ring, {e: GaussRat.coerce(c)})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        z = (0,) * len(self.ring)
        return all(e == z for e in self.terms)

    def constant_value(self) -> GaussRat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.ring), ZERO)

    def uses(self, name: str) -> bool:
        i = self.ring.index(name)
        return any(e[i] for e in self.terms)

    def used_vars(self) -> tuple[str, ...]:
        seen = [False] * len(self.ring)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen[i] = True
        return tuple(v for v, s in zip(self.ring, seen) if s)

    # -- degrees and leading data ---------------------------------------

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index(name)
        return max(e[i] for e in self.terms)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> tuple[Expvec, GaussRat]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Expvec:
        return self.leading_term(order)[0]

    def leading_coeff(self, order: MonomialOrder = GREVLEX) -> GaussRat:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        if not self.terms:
            return self
        return self * self.leading_coeff(order).inverse()

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Expvec, GaussRat]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.constant(self.ring, other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = GaussRat.coerce(other)
            if not c:
                return Poly.zero(self.ring)
            return Poly(self.ring, {e: k * c for e, k in self.terms.items()})
        self._check_ring(other)
        out: dict[Expvec, GaussRat] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.constant(self.ring, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus --------------------------------------------------------

    def partial(self, name: str) -> "Poly":
        i = self.ring.index(name)
        out: dict[Expvec, GaussRat] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[e2] = out.get(e2, ZERO) + c * e[i]
        return Poly(self.ring, out)

    # -- ring changes ------------------------------------------------------

    def embed(self, ring: tuple[str, ...]) -> "Poly":
        """Reinterpret in another ring; every used variable must exist there."""
        if ring == self.ring:
            return self
        pos = {}
        for i, v in enumerate(self.ring):
            if v in ring:
                pos[i] = ring.index(v)
        out: dict[Expvec, GaussRat] = {}
        for e, c in self.terms.items():
            e2 = [0] * len(ring)
            for i, x in enumerate(e):
                if not x:
                    continue
                if i not in pos:
                    raise ValueError(
                        f"variable {self.ring[i]!r} does not exist in ring {ring}"
                    )
                e2[pos[i]] = x
            out[tuple(e2)] = c
        return Poly(ring, out)

    def substitute(self, name: str, value: "Poly | Coeff") -> "Poly":
        """Substitute for one variable; the result ring drops that variable."""
        i = self.ring.index(name)
        ring2 = self.ring[:i] + self.ring[i + 1 :]
        if isinstance(value, (int, Fraction, GaussRat)):
            value = Poly.constant(ring2, value)
        else:
            value = value.embed(ring2)
        out = Poly.zero(ring2)
        powers: dict[int, Poly] = {0: Poly.one(ring2)}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            rest = Poly(ring2, {e[:i] + e[i + 1 :]: c})
            out = out + rest * powers[k]
        return out

    def evaluate(self, assignment: Mapping[str, GaussRat]) -> GaussRat:
        missing = [v for v in self.used_vars() if v not in assignment]
        if missing:
            raise ValueError(f"no value for {missing}")
        total = ZERO
        for e, c in self.terms.items():
            val = c
            for i, x in enumerate(e):
                if x:
                    val = val * assignment[self.ring[i]] ** x
            total = total + val
        return total

    def strata(self, name: str) -> dict[int, "Poly"]:
        """Coefficients of powers of one variable, over the smaller ring."""
        i = self.ring.index(name)
        ring2 = self.ring[:i] + self.ring[i + 1 :]
        out: dict[int, dict[Expvec, GaussRat]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1 :]] = c
        return {k: Poly(ring2, t) for k, t in sorted(out.items())}

    @staticmethod
    def from_strata(ring: tuple[str, ...], name: str, strata: Mapping[int, "Poly"]) -> "Poly":
        out = Poly.zero(ring)
        v = Poly.var(ring, name)
        for k, coeff in strata.items():
            out = out + coeff.embed(ring) * v**k
        return out

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return render(self)


# -- exact division ---------------------------------------------------------


def exact_divide(p: Poly, d: Poly, order: MonomialOrder = GREVLEX) -> Poly | None:
    """The quotient p/d when d divides p exactly, else None.

    Greedy leading-term cancellation: if d | p then d's leading term
    divides the leading term of every intermediate remainder, so a
    single failed division certifies indivisibility.
    """
    p._check_ring(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = Poly.zero(p.ring)
    r = p
    lm_d, lc_d = d.leading_term(order)
    while r:
        lm_r, lc_r = r.leading_term(order)
        if not mono_divides(lm_d, lm_r):
            return None
        t = Poly(p.ring, {mono_div(lm_r, lm_d): lc_r / lc_d})
        q = q + t
        r = r - t * d
    return q


# -- canonical rendering ------------------------------------------------------


def _fmt_fraction(f: Fraction) -> str:
    return str(f)


def _fmt_coeff_parts(c: GaussRat) -> str:
    """Body of a coefficient, without a leading sign decision."""
    if c.is_real():
        return _fmt_fraction(c.re)
    if not c.re:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_fmt_fraction(c.im)}*i"
    re = _fmt_fraction(c.re)
    if c.im == 1:
        im = "i"
    elif c.im == -1:
        im = "-i"
    else:
        im = f"{_fmt_fraction(c.im)}*i"
    joiner = "" if im.startswith("-") else "+"
    return f"({re}{joiner}{im})"


def render_coeff(c: GaussRat) -> str:
    return _fmt_coeff_parts(c)


def _mono_str(ring: tuple[str, ...], e: Expvec) -> str:
    parts = []
    for v, x in zip(ring, e):
        if x == 1:
            parts.append(v)
        elif x > 1:
            parts.append(f"{v}^{x}")
    return "*".join(parts)


def render(p: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form: terms descending in the given order.

    The output parses back to the same polynomial under the expression
    grammar (explicit * and ^, no implicit multiplication).
    """
    if not p.terms:
        return "0"
    chunks: list[str] = []
    for e, c in p.sorted_terms(order):
        mono = _mono_str(p.ring, e)
        body = _fmt_coeff_parts(c)
        if mono:
            if c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{body}*{mono}"
        if not chunks:
            chunks.append(body)
        elif body.startswith("-") and not body.startswith("-("):
            chunks.append(f" - {body[1:]}")
        elif body.startswith("("):
            chunks.append(f" + {body}")
        else:
            chunks.append(f" + {body}")
    return "".join(chunks)
