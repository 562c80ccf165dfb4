"""QQ(i)-rational solutions of small polynomial systems.

The strategy is tuned to coefficient-matching systems, which are mostly
linear: eliminate variables that occur linearly with constant
coefficient, branch on the QQ(i) roots of univariate constraints, and
fall back to a lex Groebner basis when neither applies.  Systems whose
solution set has positive dimension over the given unknowns raise
SolutionFamily; enumerating them as a list would be dishonest.
"""

from __future__ import annotations

from math import isqrt

from .groebner import groebner_basis
from .poly import LEX, Poly
from .scalars import GaussRat, ZERO, gauss_sqrt

Assignment = dict[str, GaussRat]

_ROOT_SEARCH_LIMIT = 10**7


class SolutionFamily(Exception):
    """The solution set is infinite (positive-dimensional over QQ(i)-bar)."""


# -- univariate roots over QQ(i) -------------------------------------------


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _gauss_ints_of_norm(n: int) -> list[GaussRat]:
    out = []
    for a in range(isqrt(n) + 1):
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            for sa in {a, -a}:
                for sb in {b, -b}:
                    out.append(GaussRat(sa, sb))
    return out


def _candidate_gauss_divisors(g: GaussRat) -> list[GaussRat]:
    n = g.norm()
    assert n.denominator == 1
    n = n.numerator
    if n > _ROOT_SEARCH_LIMIT:
        raise ArithmeticError("root candidate search space too large")
    cands = []
    for d in _divisors(n):
        cands.extend(_gauss_ints_of_norm(d))
    return cands


def univariate_roots(coeffs: list[GaussRat]) -> list[GaussRat]:
    """All roots in QQ(i) of sum(coeffs[k] * t**k), ascending degree.

    Degrees one and two are solved in closed form; beyond that, clear
    denominators and try every u/v with u, v Gaussian-integer divisors
    (by norm) of the trailing and leading coefficients.
    """
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has every root")
    roots: set[GaussRat] = set()
    while len(coeffs) > 1 and not coeffs[0]:
        roots.add(ZERO)
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    if deg == 0:
        pass
    elif deg == 1:
        roots.add(-coeffs[0] / coeffs[1])
    elif deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        s = gauss_sqrt(disc)
        if s is not None:
            roots.add((-b + s) / (2 * a))
            roots.add((-b - s) / (2 * a))
    else:
        den = 1
        for c in coeffs:
            den = den * c.re.denominator // _gcd_int(den, c.re.denominator)
            den = den * c.im.denominator // _gcd_int(den, c.im.denominator)
        ints = [c * den for c in coeffs]
        for u in _candidate_gauss_divisors(ints[0]):
            for v in _candidate_gauss_divisors(ints[-1]):
                cand = u / v
                acc = ZERO
                for c in reversed(ints):
                    acc = acc * cand + c
                if not acc:
                    roots.add(cand)
    return sorted(roots, key=GaussRat.sort_key)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# -- system solving -----------------------------------------------------------


def _as_univariate(p: Poly) -> tuple[str, list[GaussRat]] | None:
    used = p.used_vars()
    if len(used) != 1:
        return None
    v = used[0]
    i = p.ring.index(v)
    coeffs = [ZERO] * (p.degree_in(v) + 1)
    for e, c in p.terms.items():
        coeffs[e[i]] = c
    return v, coeffs


def _linear_pivot(p: Poly) -> tuple[str, GaussRat, Poly] | None:
    """If p == a*v + rest with constant a != 0 and rest free of v, return them."""
    for i, v in enumerate(p.ring):
        unit = tuple(1 if j == i else 0 for j in range(len(p.ring)))
        a = p.terms.get(unit)
        if a is None:
            continue
        if any(e[i] and e != unit for e in p.terms):
            continue
        rest = Poly(p.ring, {e: c for e, c in p.terms.items() if e != unit})
        return v, a, rest
    return None


def solve_system(eqs: list[Poly], ring: tuple[str, ...]) -> list[Assignment]:
    """All QQ(i) assignments of the ring variables satisfying eqs == 0.

    Raises SolutionFamily when infinitely many assignments work.
    """
    eqs = [e.embed(ring) for e in eqs]
    sols = _solve(eqs, ring)
    return sorted(
        sols, key=lambda s: tuple(s[v].sort_key() for v in ring)
    )


def _solve(eqs: list[Poly], ring: tuple[str, ...]) -> list[Assignment]:
    live = [e for e in eqs if e]
    for e in live:
        if e.is_constant():
            return []
    if not ring:
        return [{}]
    if not live:
        raise SolutionFamily(f"variables {ring} are unconstrained")

    for e in live:
        piv = _linear_pivot(e)
        if piv is None:
            continue
        v, a, rest = piv
        value = (rest * (-a.inverse())).substitute(v, 0)  # rest is free of v
        rest_ring = _minus(ring, v)
        reduced = [q.substitute(v, value) for q in live if q is not e]
        out = []
        for sol in _solve(reduced, rest_ring):
            full = dict(sol)
            full[v] = value.evaluate(sol)
            out.append(full)
        return out

    for e in live:
        uni = _as_univariate(e)
        if uni is None:
            continue
        v, coeffs = uni
        return _branch(live, ring, v, univariate_roots(coeffs))

    gb = groebner_basis(live, LEX)
    if len(gb) == 1 and gb[0].is_constant():
        return []
    # zero-dimensionality: every variable needs a pure-power leading monomial
    lms = [g.leading_monomial(LEX) for g in gb]
    for i, v in enumerate(ring):
        if not any(lm[i] and all(x == 0 for j, x in enumerate(lm) if j != i) for lm in lms):
            raise SolutionFamily(f"no univariate constraint isolates {v!r}")
    last = ring[-1]
    for g in reversed(gb):
        uni = _as_univariate(g)
        if uni is not None and uni[0] == last:
            return _branch(gb, ring, last, univariate_roots(uni[1]))
    raise SolutionFamily(f"no univariate constraint isolates {last!r}")


def _branch(
    eqs: list[Poly], ring: tuple[str, ...], var: str, roots: list[GaussRat]
) -> list[Assignment]:
    rest_ring = _minus(ring, var)
    out = []
    for r in roots:
        reduced = [q.substitute(var, r) for q in eqs]
        for sol in _solve(reduced, rest_ring):
            full = dict(sol)
            full[var] = r
            out.append(full)
    return out


def _minus(ring: tuple[str, ...], var: str) -> tuple[str, ...]:
    return tuple(v for v in ring if v != var)
