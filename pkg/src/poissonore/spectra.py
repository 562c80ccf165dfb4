"""Stable ideals, Darboux polynomials, and prime spectra for z-brackets.

Everything here is exact over QQ(i).  Searches are degree-bounded and
say so in their results; an infinite solution family surfaces as
SolutionFamily instead of a truncated answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .deriv import Derivation
from .poisson import DeltaBracket, PoissonTriple, is_poisson_ideal
from .polycore import (
    GaussRat,
    IdealPres,
    Poly,
    SolutionFamily,
    exact_divide,
    solve_linear,
    solve_system,
)
from .polycore.poly import GREVLEX, BlockElim, Expvec, render

DEFAULT_SAMPLES: tuple[GaussRat, ...] = (
    GaussRat.coerce(0),
    GaussRat.coerce(1),
    GaussRat.coerce(-2),
)


# -- stability of a fixed ideal ---------------------------------------------


@dataclass(frozen=True)
class DeltaIdealCheck:
    ok: bool
    generator: Poly | None = None
    residue: Poly | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_delta_ideal(ideal: IdealPres, delta: Derivation) -> DeltaIdealCheck:
    """Whether delta maps the ideal into itself.

    The generator criterion suffices: delta(sum f_i g_i) lands in the
    ideal as soon as every delta(g_i) does, by the product rule.
    """
    for g in ideal.generators:
        residue = ideal.normal_form(delta.apply(g.embed(delta.ring)))
        if residue:
            return DeltaIdealCheck(False, g, residue)
    return DeltaIdealCheck(True)


# -- monomial enumeration ----------------------------------------------------


def monomials_upto(nvars: int, dmax: int) -> list[Expvec]:
    """Exponent vectors of total degree <= dmax, grevlex-descending."""
    out: list[Expvec] = []

    def rec(prefix: tuple[int, ...], left: int) -> None:
        if len(prefix) == nvars - 1:
            out.extend(prefix + (k,) for k in range(left + 1))
            return
        for k in range(left + 1):
            rec(prefix + (k,), left - k)

    if nvars == 0:
        return [()] if dmax >= 0 else []
    rec((), dmax)
    out.sort(key=GREVLEX.key, reverse=True)
    return out


def monomials_of_degree(nvars: int, d: int) -> list[Expvec]:
    return [e for e in monomials_upto(nvars, d) if sum(e) == d]


# -- invariance equations -----------------------------------------------------


@dataclass(frozen=True)
class EquationSystem:
    """delta(q) = w*q spelled out coefficient by coefficient.

    q and the cofactor w carry unknown coefficients (u0, u1, ... and
    w0, w1, ... along their supports, descending); each equation is the
    coefficient of one base-ring monomial and must vanish.
    """

    base_ring: tuple[str, ...]
    unknown_ring: tuple[str, ...]
    q_template: Poly
    cofactor_template: Poly
    equations: tuple[tuple[Expvec, Poly], ...]

    def equation_for(self, monomial: Poly) -> Poly:
        e = _single_exponent(monomial)
        for key, eq in self.equations:
            if key == e:
                return eq
        return Poly.zero(self.unknown_ring)

    def solve(self) -> list[dict[str, GaussRat]]:
        return solve_system([eq for _, eq in self.equations], self.unknown_ring)

    def instantiate(self, assignment: dict[str, GaussRat]) -> tuple[Poly, Poly]:
        q, w = self.q_template, self.cofactor_template
        for v, c in assignment.items():
            q = q.substitute(v, c)
            w = w.substitute(v, c)
        return q.embed(self.base_ring), w.embed(self.base_ring)


def _single_exponent(m: Poly) -> Expvec:
    if len(m.terms) != 1:
        raise ValueError(f"not a monomial: {m}")
    return next(iter(m.terms))


def _split_by_base(expr: Poly, nbase: int, unknown_ring: tuple[str, ...]):
    """Group a combined-ring polynomial by its base-monomial part."""
    grouped: dict[Expvec, dict[Expvec, GaussRat]] = {}
    for e, c in expr.terms.items():
        grouped.setdefault(e[:nbase], {})[e[nbase:]] = c
    return {k: Poly(unknown_ring, t) for k, t in grouped.items()}


def _build_invariance(
    delta: Derivation,
    q_exps: list[Expvec],
    w_exps: list[Expvec],
    lead: Expvec | None,
) -> EquationSystem:
    base = delta.ring
    n = len(base)
    u_names = tuple(f"u{k}" for k in range(len(q_exps)))
    w_names = tuple(f"w{k}" for k in range(len(w_exps)))
    for v in u_names + w_names:
        if v in base:
            raise ValueError(f"base ring shadows unknown {v}")
    unknown_ring = u_names + w_names
    big = base + unknown_ring
    pad = (0,) * len(unknown_ring)

    def unk(name: str) -> Poly:
        return Poly.var(big, name)

    q = Poly.zero(big)
    if lead is not None:
        q = Poly(big, {lead + pad: GaussRat.coerce(1)})
    for name, e in zip(u_names, q_exps):
        q = q + Poly(big, {e + pad: GaussRat.coerce(1)}) * unk(name)
    w = Poly.zero(big)
    for name, e in zip(w_names, w_exps):
        w = w + Poly(big, {e + pad: GaussRat.coerce(1)}) * unk(name)

    lifted = Derivation(
        big,
        {
            **{v: delta.image(v).embed(big) for v in base},
            **{v: Poly.zero(big) for v in unknown_ring},
        },
    )
    expr = lifted.apply(q) - w * q
    eqs = _split_by_base(expr, n, unknown_ring)
    ordered = sorted(eqs.items(), key=lambda kv: GREVLEX.key(kv[0]), reverse=True)
    return EquationSystem(base, unknown_ring, q, w, tuple(ordered))


def invariance_equations(
    delta: Derivation,
    q_support: list[Poly],
    cofactor_support: list[Poly],
    lead: Poly | None = None,
) -> EquationSystem:
    """Equation system for q with unknown coefficients on the given supports.

    Without a lead monomial the scaling freedom of q usually makes the
    solution set infinite; pass lead to pin its coefficient to one.
    """
    q_exps = sorted(
        {_single_exponent(m) for m in q_support}, key=GREVLEX.key, reverse=True
    )
    w_exps = sorted(
        {_single_exponent(m) for m in cofactor_support}, key=GREVLEX.key, reverse=True
    )
    lead_exp = None if lead is None else _single_exponent(lead)
    if lead_exp is not None:
        q_exps = [e for e in q_exps if e != lead_exp]
    return _build_invariance(delta, q_exps, w_exps, lead_exp)


# -- Darboux search ------------------------------------------------------------


@dataclass(frozen=True)
class DarbouxCertificate:
    q: Poly
    cofactor: Poly

    def __iter__(self):
        return iter((self.q, self.cofactor))


def verify_cofactor(delta: Derivation, q: Poly) -> Poly | None:
    """The cofactor delta(q)/q when the division is exact, else None."""
    if q.is_zero():
        raise ValueError("zero polynomial is not a Darboux candidate")
    return exact_divide(delta.apply(q.embed(delta.ring)), q.embed(delta.ring))


def darboux_search(delta: Derivation, dmax: int) -> list[DarbouxCertificate]:
    """All monic Darboux polynomials of total degree 1..dmax.

    Every candidate is normalized monic at its leading monomial, so each
    stratum (degree, leading monomial) is searched once; the cofactor
    degree is capped by max image degree - 1, which is forced by degree
    count.  Raises SolutionFamily when a stratum carries infinitely many
    solutions.
    """
    base = delta.ring
    n = len(base)
    wd = max(delta.max_image_degree() - 1, 0)
    w_exps = monomials_upto(n, wd)
    found: list[DarbouxCertificate] = []
    for d in range(1, dmax + 1):
        lower = monomials_upto(n, d)
        for lm in monomials_of_degree(n, d):
            support = [e for e in lower if GREVLEX.key(e) < GREVLEX.key(lm)]
            system = _build_invariance(delta, support, w_exps, lm)
            try:
                solutions = system.solve()
            except SolutionFamily as fam:
                lm_poly = Poly(base, {lm: GaussRat.coerce(1)})
                raise SolutionFamily(
                    f"darboux stratum with leading monomial {render(lm_poly)}: {fam}"
                ) from fam
            for sol in solutions:
                q, w = system.instantiate(sol)
                check = verify_cofactor(delta, q)
                if check != w:
                    raise ArithmeticError(f"cofactor mismatch for {render(q)}")
                found.append(DarbouxCertificate(q, w))
    return found


# -- singular locus -------------------------------------------------------------


@dataclass(frozen=True)
class SingularLocus:
    ideal: IdealPres
    points: tuple[dict[str, GaussRat], ...]
    resolved: bool


def singular_locus(structure) -> SingularLocus:
    """Common zero locus of all generator brackets.

    Accepts a z-bracket (vanishing of both derivation images) or a
    bracket triple (vanishing of all three components).
    """
    if isinstance(structure, DeltaBracket):
        ring = structure.delta.ring
        gens = [structure.delta.image(v) for v in ring]
    elif isinstance(structure, Derivation):
        ring = structure.ring
        gens = [structure.image(v) for v in ring]
    elif isinstance(structure, PoissonTriple):
        ring = structure.ring
        gens = [structure.f, structure.g, structure.h]
    else:
        raise TypeError(f"no singular locus for {type(structure).__name__}")
    ideal = IdealPres(ring, gens)
    try:
        points = solve_system([g for g in gens if g], ring)
    except SolutionFamily:
        return SingularLocus(ideal, (), False)
    return SingularLocus(ideal, tuple(points), True)


# -- largest stable subideal -----------------------------------------------------


@dataclass(frozen=True)
class CoreResult:
    core: IdealPres
    exact: bool
    iterations: int


def _rename_positions(p: Poly, keep: list[int], ring: tuple[str, ...]) -> Poly:
    out: dict[Expvec, GaussRat] = {}
    for e, c in p.terms.items():
        for i, x in enumerate(e):
            if x and i not in keep:
                raise ValueError("polynomial uses an eliminated variable")
        out[tuple(e[i] for i in keep)] = c
    return Poly(ring, out)


def _stable_step(ideal: IdealPres, delta: Derivation) -> IdealPres:
    """{a in I : delta(a) in I} by eliminating the graph of a -> a + t*delta(a).

    Membership of a + t*delta(a) in (I, t^2) over the t-extended ring is
    exactly membership of both a and delta(a) in I, since the map is a
    ring morphism modulo t^2.
    """
    base = ideal.ring
    outs = tuple(v + "__out" for v in base)
    big = base + ("t",) + outs
    head = len(base) + 1
    t = Poly.var(big, "t")
    gens = [g.embed(big) for g in ideal.generators]
    gens.append(t * t)
    for v in base:
        gens.append(
            Poly.var(big, v + "__out")
            - Poly.var(big, v)
            - t * delta.image(v).embed(big)
        )
    basis = IdealPres(big, gens).basis(BlockElim(head))
    keep_names = set(outs)
    keep_pos = [big.index(o) for o in outs]
    kept = [
        _rename_positions(g, keep_pos, base)
        for g in basis
        if set(g.used_vars()) <= keep_names
    ]
    return IdealPres(base, kept)


def delta_core(ideal: IdealPres, delta: Derivation, max_iter: int = 8) -> CoreResult:
    """Largest delta-stable ideal inside the given one.

    Iterates I -> {a in I : delta(a) in I}.  A fixed point is stable and
    contains every stable subideal of I, so it is the core; the chain
    can strictly descend forever, in which case the last iterate is an
    upper bound and exact is False.
    """
    current = ideal
    for k in range(1, max_iter + 1):
        nxt = _stable_step(current, delta)
        if nxt.same_ideal(current):
            return CoreResult(current, True, k)
        current = nxt
    return CoreResult(current, False, max_iter)


# -- simplicity of y' = a y + b extensions ------------------------------------------


@dataclass(frozen=True)
class ShamsuddinVerdict:
    simple: bool
    witness: Poly | None
    bound: int
    reason: str

    def __bool__(self) -> bool:
        return self.simple


def _univar_coeffs(p: Poly) -> list[GaussRat]:
    out = [GaussRat.coerce(0)] * (p.total_degree() + 1)
    for e, c in p.terms.items():
        out[sum(e)] = c
    return out


def shamsuddin_simple(a: Poly, b: Poly, c: Poly | None = None) -> ShamsuddinVerdict:
    """Simplicity of the extension with x' = c and y' = a*y + b over k[x].

    The extension fails to be simple exactly when some r in k[x] solves
    c*r' = a*r + b (then y - r spans a stable ideal), or when c is
    nonconstant (then (c) itself is stable downstairs).  The solve is a
    bounded linear system; the bound covers every possible degree of r
    by comparing leading terms of c*r' and a*r.
    """
    ring = a.ring
    if len(ring) != 1:
        raise ValueError("coefficients must be univariate")
    if c is None:
        c = Poly.one(ring)
    b, c = b.embed(ring), c.embed(ring)
    if c.is_zero():
        raise ValueError("c must be nonzero")

    da, db, dc = a.total_degree(), b.total_degree(), c.total_degree()
    candidates = [0]
    if da >= 0:
        candidates.append(db - da)
        if dc - 1 == da:
            ratio = a.leading_coeff() / c.leading_coeff()
            if not ratio.im and ratio.re.denominator == 1 and ratio.re > 0:
                candidates.append(int(ratio.re))
    candidates.append(db - dc + 1)
    bound = max(k for k in candidates)
    bound = max(bound, 0)

    ca, cb, cc = _univar_coeffs(a), _univar_coeffs(b), _univar_coeffs(c)
    zero = GaussRat.coerce(0)
    nrows = max(dc + bound, da + bound + 1, db + 1, 1)
    rows = [[zero] * (bound + 1) for _ in range(nrows)]
    for j in range(bound + 1):
        if j >= 1:
            for k, ck in enumerate(cc):
                rows[k + j - 1][j] = rows[k + j - 1][j] + ck * j
        for k, ak in enumerate(ca):
            rows[k + j][j] = rows[k + j][j] - ak
    rhs = [cb[k] if k < len(cb) else zero for k in range(nrows)]
    solution = solve_linear(rows, rhs)

    if dc >= 1:
        witness = None
        if solution is not None:
            witness = Poly(ring, {(k,): v for k, v in enumerate(solution)})
        return ShamsuddinVerdict(False, witness, bound, "nonconstant c leaves (c) stable")
    if solution is None:
        return ShamsuddinVerdict(True, None, bound, "no polynomial r solves c*r' = a*r + b")
    witness = Poly(ring, {(k,): v for k, v in enumerate(solution)})
    return ShamsuddinVerdict(False, witness, bound, "y - r spans a stable ideal")


# -- membership of the image ----------------------------------------------------------


def image_solvable(delta: Derivation, target: Poly, dmax: int) -> Poly | None:
    """A polynomial p of degree <= dmax with delta(p) = target, or None."""
    ring = delta.ring
    target = target.embed(ring)
    cols = monomials_upto(len(ring), dmax)
    images = [delta.apply(Poly(ring, {e: GaussRat.coerce(1)})) for e in cols]
    row_exps = sorted(
        {e for im in images for e in im.terms} | set(target.terms),
        key=GREVLEX.key,
        reverse=True,
    )
    zero = GaussRat.coerce(0)
    index = {e: i for i, e in enumerate(row_exps)}
    rows = [[zero] * len(cols) for _ in row_exps]
    for j, im in enumerate(images):
        for e, cf in im.terms.items():
            rows[index[e]][j] = cf
    rhs = [target.terms.get(e, zero) for e in row_exps]
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    p = Poly(ring, {e: cf for e, cf in zip(cols, solution)})
    if delta.apply(p) != target:
        raise ArithmeticError("image solve verification failed")
    return p


# -- factorization over QQ(i) -----------------------------------------------------------


def factorizations(q: Poly) -> list[tuple[Poly, Poly]]:
    """All splittings of monic(q) into two monic nonconstant factors.

    The leading monomial of a factor divides the leading monomial of q,
    so candidate supports are enumerated per leading-monomial divisor
    and the bilinear coefficient system is solved exactly.  An empty
    answer is a certificate of irreducibility over QQ(i).
    """
    if q.total_degree() < 1:
        raise ValueError("nothing to factor")
    q = q.monic()
    d = q.total_degree()
    if d == 1:
        return []
    n = len(q.ring)
    E = q.leading_monomial()
    pairs: dict[tuple[str, str], tuple[Poly, Poly]] = {}
    for eu in itertools.product(*(range(x + 1) for x in E)):
        ev = tuple(a - b for a, b in zip(E, eu))
        du, dv = sum(eu), sum(ev)
        if du < 1 or dv < 1 or GREVLEX.key(eu) > GREVLEX.key(ev):
            continue
        u_sup = [e for e in monomials_upto(n, du) if GREVLEX.key(e) < GREVLEX.key(eu)]
        v_sup = [e for e in monomials_upto(n, dv) if GREVLEX.key(e) < GREVLEX.key(ev)]
        u_names = tuple(f"u{k}" for k in range(len(u_sup)))
        v_names = tuple(f"v{k}" for k in range(len(v_sup)))
        unknown_ring = u_names + v_names
        big = q.ring + unknown_ring
        pad = (0,) * len(unknown_ring)
        u = Poly(big, {eu + pad: GaussRat.coerce(1)})
        for name, e in zip(u_names, u_sup):
            u = u + Poly(big, {e + pad: GaussRat.coerce(1)}) * Poly.var(big, name)
        v = Poly(big, {ev + pad: GaussRat.coerce(1)})
        for name, e in zip(v_names, v_sup):
            v = v + Poly(big, {e + pad: GaussRat.coerce(1)}) * Poly.var(big, name)
        expr = u * v - q.embed(big)
        eqs = list(_split_by_base(expr, n, unknown_ring).values())
        for sol in solve_system(eqs, unknown_ring):
            fu, fv = u, v
            for name, val in sol.items():
                fu, fv = fu.substitute(name, val), fv.substitute(name, val)
            fu, fv = fu.embed(q.ring), fv.embed(q.ring)
            if fu * fv != q:
                raise ArithmeticError("factor verification failed")
            first, second = sorted(
                (fu, fv), key=lambda p: (p.total_degree(), render(p))
            )
            key = (render(first), render(second))
            pairs.setdefault(key, (first, second))
    return [pairs[k] for k in sorted(pairs)]


def irreducible_factors(q: Poly) -> tuple[GaussRat, tuple[Poly, ...]]:
    """Monic irreducible factors with multiplicity, and the scalar content."""
    if q.total_degree() < 1:
        raise ValueError("nothing to factor")
    content = q.leading_coeff()

    def split(p: Poly) -> list[Poly]:
        found = factorizations(p)
        if not found:
            return [p.monic()]
        u, v = found[0]
        return split(u) + split(v)

    factors = sorted(split(q), key=lambda p: (p.total_degree(), render(p)))
    return content, tuple(factors)


def is_irreducible(q: Poly) -> bool:
    return q.total_degree() >= 1 and not factorizations(q)


# -- spectra ------------------------------------------------------------------------------


_KIND_RANK = {
    "zero": 0,
    "principal": 1,
    "principal-family": 2,
    "point": 3,
    "point-fiber": 4,
}

# Residually-null entries (the ones containing every image of the
# derivation) are type1; extensions of delta-primes, zero included, are
# type2.
_JSON_KIND = {
    "zero": "type2",
    "principal": "type2",
    "principal-family": "type2",
    "point": "type1",
    "point-fiber": "type1",
}


@dataclass(frozen=True)
class SpectrumEntry:
    kind: str
    ring: tuple[str, ...]
    generators: tuple[Poly, ...]
    parameters: tuple[str, ...] = ()
    certificates: tuple[tuple[str, str], ...] = ()
    notes: tuple[str, ...] = ()

    def generator_strings(self) -> tuple[str, ...]:
        return tuple(render(g) for g in self.generators)

    def instances(
        self, samples: tuple[GaussRat, ...] = DEFAULT_SAMPLES
    ) -> list[tuple[Poly, ...]]:
        """Generator tuples with every parameter replaced by sample values."""
        if not self.parameters:
            return [self.generators]
        out = []
        for values in itertools.product(samples, repeat=len(self.parameters)):
            gens = []
            for g in self.generators:
                for name, val in zip(self.parameters, values):
                    g = g.substitute(name, val) if name in g.ring else g
                gens.append(g)
            out.append(tuple(gens))
        return out

    def sort_key(self) -> tuple:
        return (_KIND_RANK.get(self.kind, 9), len(self.generators), self.generator_strings())

    def to_json_dict(self) -> dict:
        certs = [{"name": "shape", "value": self.kind}]
        certs.extend({"name": k, "value": v} for k, v in self.certificates)
        certs.extend({"name": "note", "value": n} for n in self.notes)
        return {
            "kind": _JSON_KIND[self.kind],
            "generators": list(self.generator_strings()),
            "parameters": self.parameters[0] if self.parameters else None,
            "certificates": certs,
        }


@dataclass(frozen=True)
class SpectrumDescription:
    side: str
    completeness: str
    entries: tuple[SpectrumEntry, ...]
    degree_bound: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "completeness": self.completeness,
            "entries": [e.to_json_dict() for e in self.entries],
        }

    def render_text(self) -> str:
        lines = [f"side: {self.side}", f"completeness: {self.completeness}"]
        if self.degree_bound is not None:
            lines.append(f"degree bound: {self.degree_bound}")
        for e in self.entries:
            gens = ", ".join(e.generator_strings()) or "0"
            lines.append(f"  [{e.kind}] ({gens})")
            if e.parameters:
                lines.append(f"    parameters: {', '.join(e.parameters)}")
            for k, v in e.certificates:
                lines.append(f"    {k}: {v}")
            for note in e.notes:
                lines.append(f"    note: {note}")
        return "\n".join(lines)


def _point_entries(
    ring: tuple[str, ...],
    points: tuple[dict[str, GaussRat], ...],
    jac_basis: tuple[str, ...],
) -> list[SpectrumEntry]:
    out = []
    fiber_ring = ring + ("z", "alpha")
    for pt in points:
        gens = tuple(Poly.var(ring, v) - Poly.constant(ring, pt[v]) for v in ring)
        cert = (("vanishing-ideal-basis", "; ".join(jac_basis)),)
        out.append(SpectrumEntry("point", ring, gens, (), cert))
        fgens = tuple(g.embed(fiber_ring) for g in gens) + (
            Poly.var(fiber_ring, "z") - Poly.var(fiber_ring, "alpha"),
        )
        out.append(
            SpectrumEntry(
                "point-fiber",
                fiber_ring,
                fgens,
                ("alpha",),
                cert,
            )
        )
    return out


def classify_delta_spectrum(delta: Derivation, dmax: int) -> SpectrumDescription:
    """Prime z-stable spectrum of the skew extension by delta, degree-bounded.

    Height-one entries come from monic irreducible Darboux polynomials
    of degree <= dmax; the rest come from the singular locus.  The zero
    derivation is refused: its stable ideals are all ideals and a
    degree-bounded list would be meaningless.
    """
    if delta.is_zero():
        raise ValueError("zero derivation has no bounded classification")
    ring = delta.ring
    entries = [SpectrumEntry("zero", ring, ())]
    notes: list[str] = []
    completeness = f"height-one entries complete through degree {dmax}"
    try:
        certs = darboux_search(delta, dmax)
    except SolutionFamily as fam:
        certs = []
        completeness = "height-one entries unresolved"
        notes.append(f"darboux search hit an infinite family: {fam}")
    for cert in certs:
        if not is_irreducible(cert.q):
            continue
        if all(exact_divide(delta.image(v), cert.q) is not None for v in ring):
            notes.append(f"{render(cert.q)} divides every image; skipped")
            continue
        entries.append(
            SpectrumEntry(
                "principal",
                ring,
                (cert.q,),
                (),
                (
                    ("cofactor", render(cert.cofactor)),
                    ("irreducible", "no splitting over QQ(i)"),
                ),
            )
        )
    locus = singular_locus(delta)
    if locus.resolved:
        entries.extend(
            _point_entries(ring, locus.points, locus.ideal.basis_strings())
        )
    else:
        notes.append("singular locus is positive-dimensional; point entries unresolved")
    if notes:
        completeness += "; " + "; ".join(notes)
    entries.sort(key=SpectrumEntry.sort_key)
    return SpectrumDescription("ore", completeness, tuple(entries), dmax)


def classify_exact_spectrum(
    a: Poly, samples: tuple[GaussRat, ...] = DEFAULT_SAMPLES
) -> SpectrumDescription:
    """Poisson-prime spectrum for the exact bracket with potential a(x, y).

    The potential is a central element, so height-one primes are the
    irreducible factors of a - lambda; this classification is complete,
    with fiber factorizations spelled out at the sampled lambda values
    and kept symbolic elsewhere.
    """
    ring = a.ring
    if a.total_degree() < 1:
        raise ValueError("constant potential gives the zero bracket")
    ax, ay = a.partial(ring[0]), a.partial(ring[1])
    delta = Derivation(ring, {ring[0]: ay, ring[1]: -ax})
    if delta.apply(a):
        raise ArithmeticError("potential is not conserved")

    lam_ring = ring + ("lambda",)
    entries = [SpectrumEntry("zero", ring, ())]
    entries.append(
        SpectrumEntry(
            "principal-family",
            lam_ring,
            (a.embed(lam_ring) - Poly.var(lam_ring, "lambda"),),
            ("lambda",),
            (("cofactor", "0"),),
            ("prime exactly when the fiber polynomial is irreducible",),
        )
    )
    for lam in samples:
        fiber = a - Poly.constant(ring, lam)
        if fiber.total_degree() < 1:
            continue
        _, factors = irreducible_factors(fiber)
        for q in dict.fromkeys(factors):
            cof = verify_cofactor(delta, q)
            if cof is None:
                raise ArithmeticError(f"fiber factor {render(q)} is not stable")
            entries.append(
                SpectrumEntry(
                    "principal",
                    ring,
                    (q,),
                    (),
                    (
                        ("cofactor", render(cof)),
                        ("fiber", render_value(lam)),
                        ("irreducible", "no splitting over QQ(i)"),
                    ),
                )
            )
    locus = singular_locus(delta)
    completeness = "complete; fiber factorizations spelled out at sampled levels"
    if locus.resolved:
        jac = IdealPres(ring, [ax, ay])
        entries.extend(_point_entries(ring, locus.points, jac.basis_strings()))
    else:
        completeness = "point entries unresolved (positive-dimensional critical locus)"
    entries.sort(key=SpectrumEntry.sort_key)
    return SpectrumDescription("poisson", completeness, tuple(entries), None)


def render_value(c: GaussRat) -> str:
    from .polycore.poly import render_coeff

    return render_coeff(c)


# -- moving between the two sides ------------------------------------------------------


def _instance_ideal(gens: tuple[Poly, ...], bracket_ring: tuple[str, ...]) -> IdealPres:
    return IdealPres(bracket_ring, [g.embed(bracket_ring) for g in gens])


def gamma_map(
    desc: SpectrumDescription,
    delta: Derivation,
    samples: tuple[GaussRat, ...] = DEFAULT_SAMPLES,
) -> SpectrumDescription:
    """Transport a spectrum to the other side, reverifying every entry.

    The generators are carried over unchanged; what changes is the
    stability notion that gets checked on each sampled instance
    (bracket-closure on the commutative side, twist-stability on the
    skew side).
    """
    if desc.side not in ("poisson", "ore"):
        raise ValueError(f"unknown side {desc.side!r}")
    target = "ore" if desc.side == "poisson" else "poisson"
    db = DeltaBracket(delta)
    bracket_ring = db.bracket_ring
    dz = delta.extend_zero("z")
    out = []
    for entry in desc.entries:
        for gens in entry.instances(samples):
            ideal = _instance_ideal(gens, bracket_ring)
            if target == "ore":
                check = is_delta_ideal(ideal, dz)
                if not check:
                    raise ArithmeticError(
                        f"{entry.kind} entry is not twist-stable: {render(check.generator)}"
                    )
            else:
                check2 = is_poisson_ideal(db, ideal)
                if not check2:
                    raise ArithmeticError(
                        f"{entry.kind} entry is not bracket-closed"
                    )
        verified = "twist-stability" if target == "ore" else "bracket-closure"
        out.append(
            SpectrumEntry(
                entry.kind,
                entry.ring,
                entry.generators,
                entry.parameters,
                entry.certificates + (("transport-check", verified),),
                entry.notes,
            )
        )
    return SpectrumDescription(target, desc.completeness, tuple(out), desc.degree_bound)


def spectrum_inclusions(
    desc: SpectrumDescription,
    base_ring: tuple[str, ...],
    samples: tuple[GaussRat, ...] = DEFAULT_SAMPLES,
) -> tuple[tuple[int, int], ...]:
    """Pairs (i, j) with entry i strictly inside entry j on all sampled instances."""
    bracket_ring = base_ring + ("z",)
    instantiated = [
        [
            IdealPres(bracket_ring, [g.embed(bracket_ring) for g in gens])
            for gens in e.instances(samples)
        ]
        for e in desc.entries
    ]
    out = []
    for i, row_i in enumerate(instantiated):
        for j, row_j in enumerate(instantiated):
            if i == j:
                continue
            if all(
                ij.contains_ideal(ii) and not ii.contains_ideal(ij)
                for ii in row_i
                for ij in row_j
            ):
                out.append((i, j))
    return tuple(out)
