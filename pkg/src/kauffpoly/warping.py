"""Base points, the first-encounter rule, and warping degree.

A base sequence picks, for every component in a fixed order, a starting
edge and a direction of travel.  Traversing the components once each in
tuple order visits every crossing twice, once per strand; the strand
seen first is the crossing's first-encountered strand.  A crossing
whose first-encountered strand passes *under* is a warping crossing,
and the warping degree counts them.  Warping degree zero means the
diagram is descending from its base points ("monotone"), which is the
base case of the coefficient recursion.

Base points live on edges, between crossings: a purely combinatorial
diagram has no finer positions.  Free-loop components carry a single
trivial base choice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .diagram import Diagram, DiagramError, Port


@dataclass(frozen=True)
class BaseEntry:
    """Base data for one component: start edge and which endpoint is hit first."""

    component: int
    edge: int | None
    toward: Port | None


@dataclass(frozen=True)
class BaseSequence:
    """One ``BaseEntry`` per component; tuple order is traversal order."""

    entries: tuple[BaseEntry, ...]

    def __iter__(self):
        return iter(self.entries)


class Complexity(NamedTuple):
    """Lexicographic induction measure: (crossing count, warping degree)."""

    crossings: int
    degree: int


def validate_base(d: Diagram, base: BaseSequence) -> None:
    comps = d.components
    seen = [entry.component for entry in base]
    if sorted(seen) != list(range(len(comps))):
        raise DiagramError("base sequence must name every component exactly once")
    for entry in base:
        comp = comps[entry.component]
        if comp.loop_index is not None:
            if entry.edge is not None or entry.toward is not None:
                raise DiagramError("free-loop base entries carry no edge")
            continue
        if entry.edge not in comp.edges:
            raise DiagramError(
                f"edge {entry.edge} is not on component {entry.component}"
            )
        if entry.toward not in d.edge_map[entry.edge]:
            raise DiagramError(f"{entry.toward} is not an endpoint of edge {entry.edge}")


def canonical_base(d: Diagram) -> BaseSequence:
    """Deterministic base: per component, its lowest edge heading at the
    lower endpoint.  Depends only on the underlying projection, never on
    over/under data, so crossing changes preserve it."""
    entries = []
    for k, comp in enumerate(d.components):
        if comp.loop_index is not None:
            entries.append(BaseEntry(k, None, None))
        else:
            edge = comp.edges[0]
            entries.append(BaseEntry(k, edge, min(d.edge_map[edge])))
    return BaseSequence(tuple(entries))


def enumerate_bases(d: Diagram) -> Iterator[BaseSequence]:
    """All (edge, direction) choices per component, in component order."""
    per_comp: list[list[BaseEntry]] = []
    for k, comp in enumerate(d.components):
        if comp.loop_index is not None:
            per_comp.append([BaseEntry(k, None, None)])
        else:
            choices = []
            for edge in comp.edges:
                a, b = d.edge_map[edge]
                choices.append(BaseEntry(k, edge, a))
                choices.append(BaseEntry(k, edge, b))
            per_comp.append(choices)
    for combo in itertools.product(*per_comp):
        yield BaseSequence(tuple(combo))


def first_encounter(d: Diagram, base: BaseSequence) -> tuple[tuple[int, int], ...]:
    """Crossings in order of first visit, with the parity of the strand
    (0 for U, 1 for V) met first.

    The traversal never looks at over/under data, so the result is
    unchanged by crossing changes.
    """
    validate_base(d, base)
    seen: set[int] = set()
    order: list[tuple[int, int]] = []
    for entry in base:
        if entry.edge is None:
            continue
        for _, (ci, pi) in d.orbit_from(entry.edge, entry.toward):
            if ci not in seen:
                seen.add(ci)
                order.append((ci, pi % 2))
    return tuple(order)


def warping_order(d: Diagram, base: BaseSequence) -> tuple[int, ...]:
    """Warping crossings in first-encounter order."""
    out = []
    for ci, parity in first_encounter(d, base):
        if (parity == 1) != d.crossings[ci].over_v:
            out.append(ci)
    return tuple(out)


def warping_set(d: Diagram, base: BaseSequence) -> frozenset[int]:
    """Crossings whose first-encountered strand is the under-strand."""
    return frozenset(warping_order(d, base))


def warping_degree(d: Diagram, base: BaseSequence) -> int:
    return len(warping_order(d, base))


def is_monotone(d: Diagram, base: BaseSequence) -> bool:
    return warping_degree(d, base) == 0


def complexity(d: Diagram, base: BaseSequence | None = None) -> Complexity:
    if base is None:
        base = canonical_base(d)
    return Complexity(d.c, warping_degree(d, base))


def base_orientation(d: Diagram, base: BaseSequence) -> tuple[int, ...]:
    """Per-component direction signs induced by the base directions,
    relative to each component's canonical traversal."""
    validate_base(d, base)
    signs = [1] * len(d.components)
    for entry in base:
        if entry.edge is None:
            continue
        comp = d.components[entry.component]
        signs[entry.component] = 1 if (entry.edge, entry.toward) in comp.orbit else -1
    return tuple(signs)


def induced_writhe(d: Diagram, base: BaseSequence) -> int:
    """Writhe under the orientation the base directions induce."""
    return d.writhe(base_orientation(d, base))
