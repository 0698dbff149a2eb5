"""Seeded random corpora and per-graph property checks."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from .analysis import (
    arc_bound_check,
    brute_force_walks,
    is_cycle_balanced,
    mcclelland_bound,
    signed_walk_matrix,
    zero_energy_class,
)
from .charpoly import charpoly_enumerate, charpoly_trace
from .graph import GraphError, SignedDigraph, build_symmetric_double, serialize_sidigraph, strong_components, unsigned
from .spectra import QuadratureError, coulson_energy, energy_value, is_cospectral, spectrum

__all__ = [
    "CorpusConfig",
    "FAMILIES",
    "PROPERTIES",
    "PROPERTY_GROUPS",
    "random_sidigraph",
    "generate",
    "exhaustive",
    "run_corpus",
]

FAMILIES = ("random", "symmetric", "k2-doubles")
BOUND_TOL = 1e-9


@dataclass(frozen=True)
class CorpusConfig:
    """Reproducible description of a random graph stream.

    Each ordered pair ``i != j`` gets an arc with probability ``arc_density``;
    an arc is negative with probability ``negative_fraction``.
    """

    seed: int = 0
    count: int = 100
    n_min: int = 2
    n_max: int = 8
    arc_density: float = 0.4
    negative_fraction: float = 0.5
    family: str = "random"

    def __post_init__(self) -> None:
        if self.count < 0:
            raise GraphError(f"count must be >= 0, got {self.count}")
        if not 1 <= self.n_min <= self.n_max:
            raise GraphError(f"bad vertex range [{self.n_min}, {self.n_max}]")
        if not 0 < self.arc_density <= 1:
            raise GraphError(f"arc_density must lie in (0, 1], got {self.arc_density}")
        if not 0 <= self.negative_fraction <= 1:
            raise GraphError(f"negative_fraction must lie in [0, 1], got {self.negative_fraction}")
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not 0 <= self.seed < 2**64:
            raise GraphError("seed must be a 64-bit unsigned integer")

    def to_json(self) -> dict:
        return asdict(self)


def random_sidigraph(rng: np.random.Generator, n: int, density: float, negative_fraction: float) -> SignedDigraph:
    arcs = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            present = rng.random() < density
            negative = rng.random() < negative_fraction
            if present:
                arcs.append((i, j, -1 if negative else 1))
    return SignedDigraph(n, tuple(arcs))


def _random_symmetric(rng: np.random.Generator, n: int, density: float, negative_fraction: float) -> SignedDigraph:
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            present = rng.random() < density
            negative = rng.random() < negative_fraction
            if present:
                edges.append((i, j, -1 if negative else 1))
    return build_symmetric_double(edges, n)


def _k2_double(rng: np.random.Generator, n: int, negative_fraction: float) -> SignedDigraph:
    # n // 2 disjoint digons, each homogeneous; a leftover vertex stays isolated
    edges = []
    for i in range(n // 2):
        negative = rng.random() < negative_fraction
        edges.append((2 * i, 2 * i + 1, -1 if negative else 1))
    return build_symmetric_double(edges, n)


def generate(config: CorpusConfig) -> Iterator[SignedDigraph]:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.count):
        n = int(rng.integers(config.n_min, config.n_max + 1))
        if config.family == "random":
            yield random_sidigraph(rng, n, config.arc_density, config.negative_fraction)
        elif config.family == "symmetric":
            yield _random_symmetric(rng, n, config.arc_density, config.negative_fraction)
        else:
            yield _k2_double(rng, n, config.negative_fraction)


def exhaustive(n: int) -> Iterator[SignedDigraph]:
    """Every sidigraph on ``n`` vertices (``3 ** (n (n-1))`` of them)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for labels in itertools.product((0, 1, -1), repeat=len(pairs)):
        yield SignedDigraph(n, tuple((i, j, s) for (i, j), s in zip(pairs, labels) if s))


# ----------------------------------------------------------------------------
# Properties: each returns (ok, detail)

Check = Callable[[SignedDigraph], "tuple[bool, str]"]


def _prop_mcclelland(g: SignedDigraph):
    e, b = energy_value(g), mcclelland_bound(g)
    return e <= b + BOUND_TOL, f"E={e:.12g} bound={b:.12g}"


def _prop_arc_bound(g: SignedDigraph):
    e = energy_value(g)
    a, attained = arc_bound_check(g)
    ok = e <= a + BOUND_TOL and attained == (abs(e - a) <= BOUND_TOL)
    return ok, f"E={e:.12g} arcs={a} attained={attained}"


def _prop_schur(g: SignedDigraph):
    spec = spectrum(g)
    total = sum(m * abs(z) ** 2 for z, m in spec.values)
    return total <= g.num_arcs + 1e-8, f"sum|z|^2={total:.12g} arcs={g.num_arcs}"


def _prop_additivity(g: SignedDigraph):
    e = energy_value(g)
    parts = math.fsum(energy_value(c) for c in strong_components(g))
    return abs(e - parts) <= BOUND_TOL, f"E={e:.12g} components={parts:.12g}"


def _prop_coulson(g: SignedDigraph):
    e = energy_value(g)
    try:
        c = coulson_energy(g).energy
    except QuadratureError as exc:
        return False, str(exc)
    return abs(c - e) <= 1e-4, f"E={e:.12g} coulson={c:.12g}"


def _prop_balance(g: SignedDigraph):
    b = is_cycle_balanced(g).balanced
    c = is_cospectral(g, unsigned(g))
    return b == c, f"balanced={b} cospectral_with_unsigned={c}"


def _prop_walk(g: SignedDigraph, max_length: int = 4):
    for l in range(1, max_length + 1):
        plus, minus = brute_force_walks(g, l)
        if not np.array_equal(signed_walk_matrix(g, l).astype(np.int64), plus - minus):
            return False, f"walk mismatch at length {l}"
    return True, f"lengths 1..{max_length}"


def _prop_zero_energy(g: SignedDigraph):
    e = energy_value(g)
    cls = zero_energy_class(g)
    return cls.zero_energy == (e <= BOUND_TOL), f"E={e:.12g} class={cls.tag.value}"


def _prop_charpoly(g: SignedDigraph):
    if g.n > 10:
        return True, "skipped (n > 10)"
    return charpoly_enumerate(g) == charpoly_trace(g), "enumeration vs trace"


PROPERTIES: dict[str, Check] = {
    "mcclelland": _prop_mcclelland,
    "arc-bound": _prop_arc_bound,
    "schur": _prop_schur,
    "additivity": _prop_additivity,
    "coulson": _prop_coulson,
    "balance": _prop_balance,
    "walk": _prop_walk,
    "zero-energy": _prop_zero_energy,
    "charpoly": _prop_charpoly,
}

PROPERTY_GROUPS = {
    "bounds": ("mcclelland", "arc-bound", "schur"),
    "all": tuple(PROPERTIES),
}


def expand_properties(names) -> list[str]:
    out: list[str] = []
    for name in names:
        for p in PROPERTY_GROUPS.get(name, (name,)):
            if p not in PROPERTIES:
                raise GraphError(f"unknown property {p!r}")
            if p not in out:
                out.append(p)
    return out


def run_corpus(
    config: CorpusConfig,
    properties=("bounds",),
    search: str | None = None,
    dump_dir: str | Path | None = None,
) -> dict:
    """Evaluate properties over the corpus; violations carry the graph text verbatim.

    ``search="energy-equals-n"`` records graphs with ``|E - n| < 1e-6``.
    """
    names = expand_properties(properties)
    if search not in (None, "energy-equals-n"):
        raise GraphError(f"unknown search mode {search!r}")
    counts = {p: {"checked": 0, "violations": 0} for p in names}
    violations = []
    hits = []
    for index, graph in enumerate(generate(config)):
        for p in names:
            ok, detail = PROPERTIES[p](graph)
            counts[p]["checked"] += 1
            if not ok:
                counts[p]["violations"] += 1
                text = serialize_sidigraph(graph)
                violations.append({"index": index, "property": p, "detail": detail, "graph": text})
                if dump_dir is not None:
                    path = Path(dump_dir)
                    path.mkdir(parents=True, exist_ok=True)
                    (path / f"violation_{index:06d}_{p}.txt").write_text(text)
        if search == "energy-equals-n":
            e = energy_value(graph)
            if abs(e - graph.n) < 1e-6:
                hits.append({"index": index, "n": graph.n, "energy": e, "graph": serialize_sidigraph(graph)})
    summary = {
        "config": config.to_json(),
        "properties": counts,
        "total_violations": len(violations),
        "violations": violations,
    }
    if search is not None:
        summary["search"] = {"mode": search, "hits": hits}
    return summary
