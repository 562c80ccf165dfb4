"""Named example structures, stored as plain config data.

The registry is the data half of the CLI: each entry names a bracket
(by derivation images, a triple, or an exact potential), a search
bound, and optionally the expected spectrum as generator lists.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass
from importlib import resources

from .deriv import Derivation
from .parser import parse_poly
from .poisson import DeltaBracket, PoissonTriple, TRIPLE_RING
from .polycore import IdealPres, canonical_ring

# Expected-spectrum strings may mention the fiber parameters.
EXPECTED_RING = ("x", "y", "z", "alpha", "lambda")


@dataclass(frozen=True)
class ExampleConfig:
    name: str
    kind: str
    ring: tuple[str, ...]
    images: tuple[tuple[str, str], ...] = ()
    triple: tuple[str, str, str] | None = None
    potential: str | None = None
    dmax: int = 2
    expected: tuple[tuple[str, ...], ...] | None = None
    summary: str = ""

    def derivation(self) -> Derivation:
        if self.kind == "delta":
            return Derivation(
                self.ring,
                {v: parse_poly(src, self.ring) for v, src in self.images},
            )
        if self.kind == "exact":
            a = parse_poly(self.potential, self.ring)
            x, y = self.ring[0], self.ring[1]
            return Derivation(self.ring, {x: a.partial(y), y: -a.partial(x)})
        raise ValueError(f"{self.name}: no derivation for kind {self.kind!r}")

    def structure(self):
        if self.kind == "triple":
            f, g, h = (parse_poly(s, TRIPLE_RING) for s in self.triple)
            return PoissonTriple(f, g, h)
        return DeltaBracket(self.derivation())

    def expected_basis_sets(self) -> set[frozenset[str]] | None:
        """Expected entries as reduced-basis string sets, for comparison."""
        if self.expected is None:
            return None
        out = set()
        for gens in self.expected:
            polys = [parse_poly(g, EXPECTED_RING) for g in gens]
            out.add(frozenset(IdealPres(EXPECTED_RING, polys).basis_strings()))
        return out


def _parse_entry(name: str, section) -> ExampleConfig:
    kind = section.get("kind", "delta")
    ring = canonical_ring(section.get("ring", "x y").split())
    images = tuple(
        (key.split(".", 1)[1], value.strip())
        for key, value in section.items()
        if key.startswith("delta.")
    )
    triple = None
    if kind == "triple":
        triple = (section["f"].strip(), section["g"].strip(), section["h"].strip())
    potential = section.get("potential")
    expected = None
    if "expected" in section:
        groups = section["expected"].split(";")
        expected = tuple(
            tuple(g.strip() for g in group.split(",") if g.strip())
            for group in groups
        )
    return ExampleConfig(
        name=name,
        kind=kind,
        ring=ring,
        images=images,
        triple=triple,
        potential=potential.strip() if potential else None,
        dmax=section.getint("dmax", 2),
        expected=expected,
        summary=section.get("summary", "").strip(),
    )


def parse_registry(text: str) -> dict[str, ExampleConfig]:
    cp = configparser.ConfigParser()
    cp.read_string(text)
    return {name: _parse_entry(name, cp[name]) for name in cp.sections()}


def load_registry() -> dict[str, ExampleConfig]:
    text = resources.files("poissonore").joinpath("examples.cfg").read_text()
    return parse_registry(text)


def dump_registry(configs: dict[str, ExampleConfig]) -> str:
    cp = configparser.ConfigParser()
    for name, cfg in configs.items():
        section: dict[str, str] = {"kind": cfg.kind, "ring": " ".join(cfg.ring)}
        for v, src in cfg.images:
            section[f"delta.{v}"] = src
        if cfg.triple is not None:
            section["f"], section["g"], section["h"] = cfg.triple
        if cfg.potential is not None:
            section["potential"] = cfg.potential
        section["dmax"] = str(cfg.dmax)
        if cfg.expected is not None:
            section["expected"] = " ; ".join(", ".join(g) for g in cfg.expected)
        if cfg.summary:
            section["summary"] = cfg.summary
        cp[name] = section
    buf = io.StringIO()
    cp.write(buf)
    return buf.getvalue()
