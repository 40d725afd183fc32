"""Combinatorial unoriented link diagrams.

A diagram is stored as a rotation system on a 4-valent graph: each
crossing carries four ports numbered 0..3 in counterclockwise planar
order.  The strand through ports {0, 2} is called U, the strand through
{1, 3} is called V, and ``over_v`` records which of the two passes over.
Edges are a perfect matching on the set of all ports.  Crossing-free
circles carry no ports, so they are tracked by an explicit counter.

Diagrams are immutable values; every operation returns a new diagram.
Edge labels are positive integers.  Labels survive crossing changes
unchanged, and a splice names each merged edge after the smallest label
it absorbed, which keeps derived diagrams deterministic.

PD text input: whitespace-separated tokens ``X(a,b,c,d)`` listing the
edge labels at ports 0..3 counterclockwise with the under-strand
through entries 1 and 3 (ports 0 and 2), plus ``O`` tokens for free
loops.  The orientation a PD code usually implies is discarded;
orientations are supplied separately, one direction per component.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Port = tuple[int, int]  # (crossing index, port index 0..3)
EdgeRef = int | None  # an edge label, or None meaning "a free loop"


class DiagramError(ValueError):
    """Invalid diagram data or an operation applied to a missing piece."""


class PDSyntaxError(DiagramError):
    """Malformed PD text."""


@dataclass(frozen=True)
class Crossing:
    """One crossing; ``over_v`` is True when strand V (ports 1, 3) is on top."""

    over_v: bool


@dataclass(frozen=True)
class Component:
    """A closed strand: its edge labels and one traversal direction.

    ``orbit`` lists (edge label, arrival port) pairs in the canonical
    direction; it is empty for a crossing-free loop, which is identified
    by ``loop_index`` instead.
    """

    edges: tuple[int, ...]
    orbit: tuple[tuple[int, Port], ...]
    loop_index: int | None = None


_A_BRIDGES = ((0, 1), (2, 3))
_B_BRIDGES = ((0, 3), (1, 2))


@dataclass(frozen=True)
class Diagram:
    """An unoriented link diagram.

    ``edges`` holds (label, port, port) triples sorted by label, each
    port pair sorted; this canonical storage makes structural equality
    coincide with equality of labeled diagrams.
    """

    crossings: tuple[Crossing, ...]
    edges: tuple[tuple[int, Port, Port], ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalize_edges(self.edges))
        seen: set[Port] = set()
        labels: set[int] = set()
        n = len(self.crossings)
        for label, a, b in self.edges:
            if label in labels:
                raise DiagramError(f"duplicate edge label {label}")
            labels.add(label)
            for p in (a, b):
                ci, pi = p
                if not (0 <= ci < n and 0 <= pi < 4):
                    raise DiagramError(f"edge {label} references missing port {p}")
                if p in seen:
                    raise DiagramError(f"port {p} used by two edges")
                seen.add(p)
        if len(seen) != 4 * n:
            raise DiagramError("some crossing port is not matched by any edge")
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")

    # ------------------------------------------------------------------
    # basic data

    @property
    def c(self) -> int:
        """Crossing number."""
        return len(self.crossings)

    @property
    def r(self) -> int:
        """Number of link components, free loops included."""
        return len(self.components)

    @cached_property
    def edge_map(self) -> dict[int, tuple[Port, Port]]:
        return {label: (a, b) for label, a, b in self.edges}

    @cached_property
    def port_map(self) -> dict[Port, tuple[int, Port]]:
        """port -> (edge label, opposite endpoint of that edge)."""
        out: dict[Port, tuple[int, Port]] = {}
        for label, a, b in self.edges:
            out[a] = (label, b)
            out[b] = (label, a)
        return out

    def edge_labels(self) -> tuple[int, ...]:
        return tuple(label for label, _, _ in self.edges)

    def has_edge(self, label: int) -> bool:
        return label in self.edge_map

    def _check_crossing(self, p: int) -> None:
        if not (0 <= p < self.c):
            raise DiagramError(f"no crossing {p} in a {self.c}-crossing diagram")

    # ------------------------------------------------------------------
    # strand following

    def next_dart(self, dart: tuple[int, Port]) -> tuple[int, Port]:
        """Cross the diagram at the dart's head and continue along the strand."""
        _, (ci, pi) = dart
        out_port = (ci, (pi + 2) % 4)
        label, other = self.port_map[out_port]
        return (label, other)

    def orbit_from(self, edge: int, toward: Port) -> tuple[tuple[int, Port], ...]:
        """The cyclic arrival sequence starting mid-edge heading at ``toward``."""
        start = (edge, toward)
        orbit = [start]
        cur = self.next_dart(start)
        while cur != start:
            orbit.append(cur)
            cur = self.next_dart(cur)
        return tuple(orbit)

    @cached_property
    def components(self) -> tuple[Component, ...]:
        comps: list[Component] = []
        visited: set[tuple[int, Port]] = set()
        for label, a, b in self.edges:  # edges sorted by label: discovery is canonical
            start = (label, min(a, b))
            if start in visited:
                continue
            orbit = self.orbit_from(label, min(a, b))
            visited.update(orbit)
            # mark the reverse direction as visited too
            for e, arr in orbit:
                pa, pb = self.edge_map[e]
                visited.add((e, pb if arr == pa else pa))
            comps.append(Component(edges=tuple(sorted(e for e, _ in orbit)), orbit=orbit))
        for i in range(self.free_loops):
            comps.append(Component(edges=(), orbit=(), loop_index=i))
        return tuple(comps)

    @cached_property
    def component_of_edge(self) -> dict[int, int]:
        return {e: k for k, comp in enumerate(self.components) for e in comp.edges}

    @cached_property
    def strand_arrivals(self) -> dict[tuple[int, int], tuple[int, Port]]:
        """(crossing, strand parity) -> (component index, canonical arrival port)."""
        out: dict[tuple[int, int], tuple[int, Port]] = {}
        for k, comp in enumerate(self.components):
            for _, (ci, pi) in comp.orbit:
                out[(ci, pi % 2)] = (k, (ci, pi))
        return out

    def delta_p(self, p: int) -> int:
        """1 if the two strands at crossing ``p`` lie on different components."""
        self._check_crossing(p)
        return 0 if self.strand_arrivals[(p, 0)][0] == self.strand_arrivals[(p, 1)][0] else 1

    # ------------------------------------------------------------------
    # local operations

    def crossing_change(self, p: int) -> "Diagram":
        """Flip which strand passes over at ``p``; everything else is unchanged."""
        self._check_crossing(p)
        crossings = list(self.crossings)
        crossings[p] = Crossing(over_v=not crossings[p].over_v)
        return Diagram(tuple(crossings), self.edges, self.free_loops)

    def mirror(self) -> "Diagram":
        """Flip every crossing."""
        return Diagram(
            tuple(Crossing(over_v=not x.over_v) for x in self.crossings),
            self.edges,
            self.free_loops,
        )

    def splice(self, p: int, kind: str) -> "Diagram":
        """Remove crossing ``p`` by one of its two smoothings.

        Kind "A" joins ports 0-1 and 2-3; kind "B" joins ports 0-3 and
        1-2.  The crossing count drops by exactly one; a smoothing that
        closes off a crossing-free circle increments ``free_loops``.
        """
        self._check_crossing(p)
        if kind == "A":
            pairs = _A_BRIDGES
        elif kind == "B":
            pairs = _B_BRIDGES
        else:
            raise DiagramError(f"splice kind must be 'A' or 'B', not {kind!r}")
        bridges: dict[Port, Port] = {}
        for i, j in pairs:
            bridges[(p, i)] = (p, j)
            bridges[(p, j)] = (p, i)
        return self._eliminate({p}, bridges)

    def erase_crossings(self, which: Iterable[int]) -> "Diagram":
        """Remove crossings by letting both strands pass straight through."""
        removed = set(which)
        for p in removed:
            self._check_crossing(p)
        bridges: dict[Port, Port] = {}
        for p in removed:
            bridges[(p, 0)] = (p, 2)
            bridges[(p, 2)] = (p, 0)
            bridges[(p, 1)] = (p, 3)
            bridges[(p, 3)] = (p, 1)
        return self._eliminate(removed, bridges)

    def _eliminate(self, removed: set[int], bridges: dict[Port, Port]) -> "Diagram":
        """Drop ``removed`` crossings, rejoining their edges along ``bridges``.

        Maximal edge-bridge chains between surviving ports become single
        edges named after the smallest absorbed label; chains that close
        up entirely inside the removed crossings become free loops.
        """
        port_map = self.port_map
        new_index: dict[int, int] = {}
        for ci in range(self.c):
            if ci not in removed:
                new_index[ci] = len(new_index)

        def remap(port: Port) -> Port:
            return (new_index[port[0]], port[1])

        new_edges: list[tuple[int, Port, Port]] = []
        done: set[Port] = set()
        used_internal: set[Port] = set()
        for label, a, b in self.edges:
            for start in (a, b):
                if start[0] in removed or start in done:
                    continue
                labels = []
                cur = start
                while True:
                    lab, other = port_map[cur]
                    labels.append(lab)
                    if other[0] not in removed:
                        end = other
                        break
                    used_internal.add(other)
                    cur = bridges[other]
                    used_internal.add(cur)
                done.add(start)
                done.add(end)
                new_edges.append((min(labels), remap(start), remap(end)))

        loops = self.free_loops
        remaining = {
            (ci, pi) for ci in removed for pi in range(4) if (ci, pi) not in used_internal
        }
        while remaining:
            start = min(remaining)
            cur = start
            while True:
                remaining.discard(cur)
                _, other = port_map[cur]
                remaining.discard(other)
                nxt = bridges[other]
                remaining.discard(nxt)
                if nxt == start:
                    break
                cur = nxt
            loops += 1

        crossings = tuple(x for ci, x in enumerate(self.crossings) if ci not in removed)
        return Diagram(crossings, _normalize_edges(new_edges), loops)

    def delta_shift(self, p: int, kind: str) -> int:
        """Signed component-count change ``r(splice) - r``; always in {-1, 0, +1}."""
        return self.splice(p, kind).r - self.r

    # ------------------------------------------------------------------
    # orientations and writhe

    def _arrival(self, p: int, parity: int, orientation: Sequence[int]) -> Port:
        comp, arr = self.strand_arrivals[(p, parity)]
        if orientation[comp] == 1:
            return arr
        return (arr[0], (arr[1] + 2) % 4)

    def _check_orientation(self, orientation: Sequence[int]) -> None:
        if len(orientation) != self.r:
            raise DiagramError(
                f"orientation has {len(orientation)} entries for {self.r} components"
            )
        if any(s not in (1, -1) for s in orientation):
            raise DiagramError("orientation entries must be +1 or -1")

    def sign_of(self, p: int, orientation: Sequence[int]) -> int:
        """Crossing sign: +1 when the under-strand direction maps to the
        over-strand direction by a counterclockwise quarter turn."""
        self._check_crossing(p)
        self._check_orientation(orientation)
        over_parity = 1 if self.crossings[p].over_v else 0
        out_over = (self._arrival(p, over_parity, orientation)[1] + 2) % 4
        out_under = (self._arrival(p, 1 - over_parity, orientation)[1] + 2) % 4
        return 1 if out_over == (out_under + 1) % 4 else -1

    def writhe(self, orientation: Sequence[int]) -> int:
        self._check_orientation(orientation)
        return sum(self.sign_of(p, orientation) for p in range(self.c))

    # ------------------------------------------------------------------
    # faces

    def faces(self) -> tuple[tuple[tuple[int, Port], ...], ...]:
        """Face cycles of the rotation system (free loops excluded).

        A face is a cyclic dart sequence; from a dart arriving at port
        (c, i) the face continues along the edge at port (c, i+1 mod 4).
        """
        darts = [(label, head) for label, a, b in self.edges for head in (a, b)]
        darts.sort()
        out: list[tuple[tuple[int, Port], ...]] = []
        visited: set[tuple[int, Port]] = set()
        for start in darts:
            if start in visited:
                continue
            face = []
            cur = start
            while True:
                face.append(cur)
                visited.add(cur)
                ci, pi = cur[1]
                label, other = self.port_map[(ci, (pi + 1) % 4)]
                cur = (label, other)
                if cur == start:
                    break
            out.append(tuple(face))
        return tuple(out)

    def connected_pieces(self) -> tuple[frozenset[int], ...]:
        """Crossing sets of the connected pieces of the 4-valent graph."""
        seen: set[int] = set()
        pieces: list[frozenset[int]] = []
        for start in range(self.c):
            if start in seen:
                continue
            piece = {start}
            stack = [start]
            while stack:
                ci = stack.pop()
                for pi in range(4):
                    nb = self.port_map[(ci, pi)][1][0]
                    if nb not in piece:
                        piece.add(nb)
                        stack.append(nb)
            seen |= piece
            pieces.append(frozenset(piece))
        return tuple(pieces)

    def is_planar(self) -> bool:
        """Euler check V - E + F = 2 on every connected piece."""
        if self.c == 0:
            return True
        face_piece: dict[int, int] = {}
        pieces = self.connected_pieces()
        where = {ci: k for k, piece in enumerate(pieces) for ci in piece}
        counts = [0] * len(pieces)
        for face in self.faces():
            counts[where[face[0][1][0]]] += 1
        # V - E + F = 2 with E = 2V on a 4-valent piece
        return all(counts[k] == len(piece) + 2 for k, piece in enumerate(pieces))

    # ------------------------------------------------------------------
    # serialization

    def pd_quadruple(self, p: int) -> tuple[int, int, int, int]:
        """Edge labels at ports 0..3, rotated so the under-strand sits at
        entries 1 and 3 (the PD text convention)."""
        labels = [self.port_map[(p, i)][0] for i in range(4)]
        if self.crossings[p].over_v:
            return tuple(labels)  # type: ignore[return-value]
        return (labels[1], labels[2], labels[3], labels[0])

    def to_pd(self) -> str:
        tokens = ["X(%d,%d,%d,%d)" % self.pd_quadruple(p) for p in range(self.c)]
        tokens.extend(["O"] * self.free_loops)
        return " ".join(tokens) if tokens else ""

    def to_json_obj(self) -> dict:
        return {
            "crossings": [list(self.pd_quadruple(p)) for p in range(self.c)],
            "free_loops": self.free_loops,
        }

    def __str__(self) -> str:
        return self.to_pd() or "(empty)"


def _normalize_edges(edges: Iterable[tuple[int, Port, Port]]) -> tuple[tuple[int, Port, Port], ...]:
    return tuple(sorted((label, min(a, b), max(a, b)) for label, a, b in edges))


_X_TOKEN = re.compile(r"^X\((\d+),(\d+),(\d+),(\d+)\)$")


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a diagram.

    Each label must occur exactly twice across the whole input; the
    strand through quadruple entries 1 and 3 is read as the under-strand.
    An ``O`` token adds a crossing-free loop.
    """
    quads: list[tuple[int, int, int, int]] = []
    loops = 0
    for token in text.split():
        if token == "O":
            loops += 1
            continue
        m = _X_TOKEN.match(token)
        if not m:
            raise PDSyntaxError(f"malformed PD token {token!r}")
        quad = tuple(int(g) for g in m.groups())
        if any(v <= 0 for v in quad):
            raise PDSyntaxError(f"edge labels must be positive in {token!r}")
        quads.append(quad)  # type: ignore[arg-type]

    occurrences: dict[int, list[Port]] = {}
    for ci, quad in enumerate(quads):
        for pi, label in enumerate(quad):
            occurrences.setdefault(label, []).append((ci, pi))
    edges = []
    for label, ports in sorted(occurrences.items()):
        if len(ports) != 2:
            raise PDSyntaxError(f"edge label {label} occurs {len(ports)} times, expected 2")
        edges.append((label, ports[0], ports[1]))

    crossings = tuple(Crossing(over_v=True) for _ in quads)
    return Diagram(crossings, _normalize_edges(edges), loops)


def _relabel(d: Diagram, label_offset: int, crossing_offset: int) -> list[tuple[int, Port, Port]]:
    return [
        (label + label_offset, (a[0] + crossing_offset, a[1]), (b[0] + crossing_offset, b[1]))
        for label, a, b in d.edges
    ]


def disjoint_union(d: Diagram, d2: Diagram) -> Diagram:
    """Place two diagrams side by side; components simply add up."""
    offset = max(d.edge_labels(), default=0)
    edges = list(d.edges) + _relabel(d2, offset, d.c)
    return Diagram(d.crossings + d2.crossings, _normalize_edges(edges), d.free_loops + d2.free_loops)


def _resolve_edge_ref(d: Diagram, e: EdgeRef) -> EdgeRef:
    if e is not None:
        if not d.has_edge(e):
            raise DiagramError(f"no edge {e} in diagram {d.to_pd()!r}")
        return e
    if d.free_loops:
        return None
    labels = d.edge_labels()
    if not labels:
        raise DiagramError("cannot form a connected sum with an empty diagram")
    return labels[0]


def connected_sum(d: Diagram, d2: Diagram, e: EdgeRef = None, e2: EdgeRef = None) -> Diagram:
    """Cut an edge (or free loop) of each diagram and reconnect across.

    The result has r + r' - 1 components and c + c' crossings.  Passing
    ``None`` for an edge picks a free loop when one exists, otherwise
    the lowest-labeled edge.
    """
    e = _resolve_edge_ref(d, e)
    e2 = _resolve_edge_ref(d2, e2)
    offset = max(d.edge_labels(), default=0)
    crossings = d.crossings + d2.crossings
    edges = list(d.edges) + _relabel(d2, offset, d.c)
    loops = d.free_loops + d2.free_loops

    if e is None and e2 is None:
        # joining two free loops yields one free loop
        return Diagram(crossings, _normalize_edges(edges), loops - 1)
    if e is None or e2 is None:
        # a cut free loop is absorbed into the other diagram's cut edge
        return Diagram(crossings, _normalize_edges(edges), loops - 1)

    a, b = d.edge_map[e]
    a2, b2 = d2.edge_map[e2]
    a2 = (a2[0] + d.c, a2[1])
    b2 = (b2[0] + d.c, b2[1])
    keep = [edge for edge in edges if edge[0] not in (e, e2 + offset)]
    top = max(label for label, _, _ in edges)
    keep.append((top + 1, a, a2))
    keep.append((top + 2, b, b2))
    return Diagram(crossings, _normalize_edges(keep), loops)
