"""Downwards spin and oscillator diagram categories.

A diagram between label lists carries an ordered tuple of circled labels, a
matching on some remaining labels (unordered pairs for the spin flavor,
directed pairs for the oscillator flavor), and a bijection from the leftover
labels onto the target.

Normal form sorts the circled tuple ascending and orients every directed
edge from the smaller to the larger label.  The rewrite moving an adjacent
circled pair (a, b) to (b, a) costs a sign for the spin flavor and spawns an
extra diagram with a new edge in both flavors, so normalization produces an
integer combination of normal forms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

SPIN = "spin"
OSC = "osc"


@dataclass(frozen=True)
class Diagram:
    """One basis diagram.  Immutable and hashable; not necessarily normal."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    circled: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    through: tuple[tuple[int, int], ...]

    def __post_init__(self):
        src = set(self.source)
        if len(src) != len(self.source):
            raise ValueError("duplicate source labels")
        if len(set(self.target)) != len(self.target):
            raise ValueError("duplicate target labels")
        circled = set(self.circled)
        if len(circled) != len(self.circled):
            raise ValueError("duplicate circled labels")
        matched = [v for e in self.edges for v in e]
        if len(matched) != len(set(matched)):
            raise ValueError("matching is not a partial matching")
        through_src = [a for a, _ in self.through]
        through_tgt = [b for _, b in self.through]
        pieces = circled | set(matched) | set(through_src)
        if pieces != src or len(self.circled) + len(matched) + len(through_src) != len(
            self.source
        ):
            raise ValueError("circled, matched and through labels must partition the source")
        if sorted(through_tgt) != sorted(self.target):
            raise ValueError("through part must biject onto the target")

    def through_map(self) -> dict[int, int]:
        return dict(self.through)

    @staticmethod
    def make(
        source: Iterable[int],
        target: Iterable[int],
        circled: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        through: Iterable[tuple[int, int]] | None = None,
    ) -> "Diagram":
        source = tuple(source)
        target = tuple(target)
        circled = tuple(circled)
        edges = tuple(tuple(e) for e in edges)
        if through is None:
            used = set(circled) | {v for e in edges for v in e}
            rest = [x for x in source if x not in used]
            if len(rest) != len(target):
                raise ValueError("cannot infer the through bijection")
            through = tuple(zip(rest, target))
        else:
            through = tuple(tuple(t) for t in through)
        return Diagram(source, target, circled, edges, tuple(through))

    @staticmethod
    def identity(labels: Iterable[int]) -> "Diagram":
        labels = tuple(labels)
        return Diagram(labels, labels, (), (), tuple((x, x) for x in labels))

    def to_json(self, flavor: str) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "circled": list(self.circled),
            "edges": [list(e) for e in self.edges],
            "through": [list(t) for t in self.through],
            "flavor": flavor,
        }

    @staticmethod
    def from_json(data: dict) -> tuple["Diagram", str]:
        d = Diagram(
            tuple(data["source"]),
            tuple(data["target"]),
            tuple(data["circled"]),
            tuple(tuple(e) for e in data["edges"]),
            tuple(tuple(t) for t in data["through"]),
        )
        flavor = data.get("flavor", SPIN)
        if flavor not in (SPIN, OSC):
            raise ValueError(f"unknown flavor {flavor!r}")
        return d, flavor


class DiagramMorphism:
    """Integer combination of normal-form diagrams of one flavor."""

    __slots__ = ("flavor", "combination")

    def __init__(self, flavor: str, combination: dict[Diagram, int] | None = None):
        if flavor not in (SPIN, OSC):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.flavor = flavor
        self.combination: dict[Diagram, int] = {}
        if combination:
            for d, c in combination.items():
                if c:
                    self.combination[d] = int(c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiagramMorphism)
            and self.flavor == other.flavor
            and self.combination == other.combination
        )

    def __hash__(self):
        return hash((self.flavor, frozenset(self.combination.items())))

    def __bool__(self) -> bool:
        return bool(self.combination)

    def __add__(self, other: "DiagramMorphism") -> "DiagramMorphism":
        if other.flavor != self.flavor:
            raise ValueError("flavor mismatch")
        out = dict(self.combination)
        for d, c in other.combination.items():
            out[d] = out.get(d, 0) + c
        return DiagramMorphism(self.flavor, out)

    def scale(self, k: int) -> "DiagramMorphism":
        return DiagramMorphism(
            self.flavor, {d: k * c for d, c in self.combination.items()}
        )

    def __repr__(self) -> str:
        return f"DiagramMorphism({self.flavor}, {len(self.combination)} diagrams)"

    def to_json(self) -> list[dict]:
        items = sorted(
            self.combination.items(), key=lambda dc: (dc[0].circled, dc[0].edges)
        )
        return [{"diagram": d.to_json(self.flavor), "coeff": c} for d, c in items]


def normalize(
    diagram: Diagram, flavor: str, rng: Optional[random.Random] = None
) -> DiagramMorphism:
    """Rewrite to the normal-form basis.

    Adjacent out-of-order circled pairs are exchanged one at a time; when an
    rng is supplied the choice of which inversion to fix is randomized, which
    the confluence tests exploit.  Directed edges are oriented upward with a
    sign per reversal for the oscillator flavor.
    """
    if flavor not in (SPIN, OSC):
        raise ValueError(f"unknown flavor {flavor!r}")
    pending: dict[Diagram, int] = {}
    base, sign = _orient_edges(diagram, flavor)
    pending[base] = sign
    done: dict[Diagram, int] = {}
    while pending:
        d, coeff = pending.popitem()
        spots = [
            i
            for i in range(len(d.circled) - 1)
            if d.circled[i] > d.circled[i + 1]
        ]
        if not spots:
            done[d] = done.get(d, 0) + coeff
            if done[d] == 0:
                del done[d]
            continue
        i = spots[0] if rng is None else rng.choice(spots)
        a, b = d.circled[i], d.circled[i + 1]
        swapped = Diagram(
            d.source,
            d.target,
            d.circled[:i] + (b, a) + d.circled[i + 2 :],
            d.edges,
            d.through,
        )
        # The exchange relation: (.., a, b, ..) equals a sign times the
        # swapped order plus a diagram with a new edge a->b, where the spin
        # sign is -1 and the oscillator sign is +1 with edge b->a oriented
        # downward (hence a minus after reorientation).
        new_edge, edge_sign = _oriented_edge(a, b, flavor)
        with_edge = Diagram(
            d.source,
            d.target,
            d.circled[:i] + d.circled[i + 2 :],
            tuple(sorted(d.edges + (new_edge,))),
            d.through,
        )
        if flavor == SPIN:
            _accumulate(pending, swapped, -coeff)
            _accumulate(pending, with_edge, coeff)
        else:
            _accumulate(pending, swapped, coeff)
            _accumulate(pending, with_edge, coeff * edge_sign)
    return DiagramMorphism(flavor, done)


def _oriented_edge(a: int, b: int, flavor: str) -> tuple[tuple[int, int], int]:
    """Normal orientation of the edge created by exchanging circled (a, b).

    The created edge points a->b; reorienting to small->large costs a sign
    in the oscillator flavor only.
    """
    if flavor == SPIN:
        return (min(a, b), max(a, b)), 1
    if a < b:
        return (a, b), 1
    return (b, a), -1


def _orient_edges(diagram: Diagram, flavor: str) -> tuple[Diagram, int]:
    sign = 1
    edges = []
    for a, b in diagram.edges:
        if a <= b:
            edges.append((a, b))
        else:
            edges.append((b, a))
            if flavor == OSC:
                sign = -sign
    edges.sort()
    return (
        Diagram(
            diagram.source,
            diagram.target,
            diagram.circled,
            tuple(edges),
            tuple(sorted(diagram.through)),
        ),
        sign,
    )


def _accumulate(table: dict[Diagram, int], d: Diagram, c: int) -> None:
    v = table.get(d, 0) + c
    if v:
        table[d] = v
    elif d in table:
        del table[d]


def morphism_from(diagram: Diagram, flavor: str) -> DiagramMorphism:
    return normalize(diagram, flavor)


def compose(g: DiagramMorphism, f: DiagramMorphism) -> DiagramMorphism:
    """Composition g after f, bilinear over normalized concatenations."""
    if g.flavor != f.flavor:
        raise ValueError("flavor mismatch")
    out = DiagramMorphism(f.flavor)
    for df, cf in f.combination.items():
        for dg, cg in g.combination.items():
            raw = _concatenate(dg, df)
            out = out + normalize(raw, f.flavor).scale(cf * cg)
    return out


def _concatenate(g: Diagram, f: Diagram) -> Diagram:
    """One-diagram composition: pull back g's structure along f's bijection."""
    if f.target != g.source:
        raise ValueError(
            f"label mismatch: target {f.target} composed with source {g.source}"
        )
    finv = {b: a for a, b in f.through}
    circled = f.circled + tuple(finv[u] for u in g.circled)
    edges = f.edges + tuple((finv[a], finv[b]) for a, b in g.edges)
    g_through = g.through_map()
    through = tuple(
        (a, g_through[b]) for a, b in f.through if b not in set(g.circled)
        and all(b not in e for e in g.edges)
    )
    return Diagram(f.source, g.target, circled, edges, through)


def identity_morphism(labels: Iterable[int], flavor: str) -> DiagramMorphism:
    return DiagramMorphism(flavor, {Diagram.identity(labels): 1})


def hom_dim(source_size: int, target_size: int, flavor: str = SPIN) -> int:
    """Number of normal-form diagrams between label sets of the given sizes.

    The count is flavor independent: circled subsets carry a canonical
    order and edges a canonical orientation.
    """
    if flavor not in (SPIN, OSC):
        raise ValueError(f"unknown flavor {flavor!r}")
    if source_size < 0 or target_size < 0:
        return 0
    total = 0
    t = target_size
    for m in range((source_size - t) // 2 + 1):
        c = source_size - t - 2 * m
        if c < 0:
            continue
        total += (
            math.comb(source_size, c)
            * math.comb(source_size - c, 2 * m)
            * _double_factorial(2 * m - 1)
            * math.factorial(t)
        )
    return total


def _double_factorial(k: int) -> int:
    if k <= 0:
        return 1
    return k * _double_factorial(k - 2)


def random_raw_diagram(
    rng: random.Random, max_labels: int = 6, flavor: str = SPIN
) -> Diagram:
    """Random diagram with arbitrary circled order and edge orientations."""
    size = rng.randint(0, max_labels)
    labels = list(range(1, size + 1))
    rng.shuffle(labels)
    n_circ = rng.randint(0, size)
    circled = tuple(labels[:n_circ])
    rest = labels[n_circ:]
    n_edge = rng.randint(0, len(rest) // 2)
    edges = tuple((rest[2 * i], rest[2 * i + 1]) for i in range(n_edge))
    through_src = rest[2 * n_edge :]
    target = list(range(101, 101 + len(through_src)))
    rng.shuffle(target)
    through = tuple(zip(through_src, target))
    return Diagram(tuple(range(1, size + 1)), tuple(sorted(target)), circled, edges, through)
