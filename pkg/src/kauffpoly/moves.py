"""Reidemeister move generators, site detectors, and seeded random walks.

Moves produce certified-equivalent diagram pairs for invariance testing:
the coefficient tables must be invariant under R2 and R3 and scale by
``y^±1`` under R1.  Every generator preserves diagram validity (port
matching, planarity of the rotation system), every add/remove pair is an
exact inverse, and walks are fully determined by (start, steps, seed,
max crossings), so failures replay bit-exactly.

Site conventions (ports counterclockwise, face tracing as in
:meth:`kauffpoly.diagram.Diagram.faces`):

* a kink is a crossing with an edge joining two cyclically adjacent
  ports; its sign depends only on which adjacent pair and the over flag;
* an R2 bigon is a 2-gon face on two distinct crossings whose side
  strand passes over (or under) at both;
* an R3 site is a 3-gon face on three distinct crossings together with a
  side whose strand passes over both other strands or under both.  The
  slide is a pure rewiring of eight edge endpoints; crossings, over
  flags, and edge labels are untouched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Crossing, Diagram, DiagramError, EdgeRef, Port, _normalize_edges


class MoveSiteError(DiagramError):
    """The requested move does not apply at the given site."""


Dart = tuple[int, Port]  # (edge label, head port)


def _is_over(d: Diagram, ci: int, pi: int) -> bool:
    return (pi % 2 == 1) == d.crossings[ci].over_v


# ----------------------------------------------------------------------
# R1

def kink_sites(d: Diagram) -> tuple[tuple[int, int, tuple[int, int]], ...]:
    """(crossing, loop edge label, loop port pair) for every removable kink."""
    out = []
    for label, a, b in d.edges:
        if a[0] == b[0] and (a[1] - b[1]) % 4 in (1, 3):
            lo, hi = sorted((a[1], b[1]))
            pair = (lo, hi) if hi - lo == 1 else (hi, lo)  # (3, 0) wraps
            out.append((a[0], label, pair))
    return tuple(out)


def kink_sign(d: Diagram, p: int) -> int:
    """Sign of a kink crossing; independent of traversal direction."""
    for ci, _, pair in kink_sites(d):
        if ci == p:
            if pair in ((1, 2), (3, 0)):
                return 1 if d.crossings[p].over_v else -1
            return -1 if d.crossings[p].over_v else 1
    raise MoveSiteError(f"crossing {p} is not a kink")


def r1_add(d: Diagram, e: EdgeRef, chirality: str, side: str = "R") -> Diagram:
    """Insert a one-crossing kink on edge ``e`` (or on a free loop when
    ``e`` is None).  ``chirality`` '+'/'-' fixes the new crossing's sign
    for any orientation; ``side`` 'L'/'R' places the loop on either side
    of the strand."""
    if chirality not in ("+", "-"):
        raise MoveSiteError(f"chirality must be '+' or '-', not {chirality!r}")
    if side not in ("L", "R"):
        raise MoveSiteError(f"side must be 'L' or 'R', not {side!r}")
    k = d.c
    top = max(d.edge_labels(), default=0)
    # side R puts the loop on ports (1,2), side L on (2,3); the sign of a
    # (1,2)- or (3,0)-loop kink equals over_v, of the other two its negation
    over_v = (chirality == "+") if side == "R" else (chirality == "-")
    crossings = d.crossings + (Crossing(over_v=over_v),)

    if e is None:
        if not d.free_loops:
            raise MoveSiteError("no free loop to kink")
        if side == "R":
            new = [(top + 1, (k, 0), (k, 3)), (top + 2, (k, 1), (k, 2))]
        else:
            new = [(top + 1, (k, 0), (k, 1)), (top + 2, (k, 2), (k, 3))]
        return Diagram(crossings, _normalize_edges(list(d.edges) + new), d.free_loops - 1)

    if not d.has_edge(e):
        raise MoveSiteError(f"no edge {e}")
    a, b = d.edge_map[e]
    rest = [edge for edge in d.edges if edge[0] != e]
    if side == "R":
        new = [(e, a, (k, 0)), (top + 1, (k, 3), b), (top + 2, (k, 1), (k, 2))]
    else:
        new = [(e, a, (k, 0)), (top + 1, (k, 1), b), (top + 2, (k, 2), (k, 3))]
    return Diagram(crossings, _normalize_edges(rest + new), d.free_loops)


def r1_remove(d: Diagram, p: int) -> Diagram:
    """Undo a kink at crossing ``p``."""
    for ci, _, pair in kink_sites(d):
        if ci == p:
            kind = "A" if pair in ((1, 2), (3, 0)) else "B"
            return d.splice(p, kind)
    raise MoveSiteError(f"crossing {p} is not a kink")


# ----------------------------------------------------------------------
# R2

def cofacial_dart_pairs(d: Diagram) -> tuple[tuple[Dart, Dart], ...]:
    """Ordered dart pairs of distinct edges sharing a face: R2-add sites."""
    out = []
    for face in d.faces():
        for d1 in face:
            for d2 in face:
                if d1[0] != d2[0]:
                    out.append((d1, d2))
    return tuple(out)


def r2_add_at(d: Diagram, dart1: Dart, dart2: Dart, over_first: bool = True) -> Diagram:
    """Push the strand of ``dart1`` across the face onto the strand of
    ``dart2``, creating a bigon; ``over_first`` sends it across on top."""
    e1, h1 = dart1
    e2, h2 = dart2
    if e1 == e2:
        raise MoveSiteError("the two edges of an R2 move must differ")
    for e, h in ((e1, h1), (e2, h2)):
        if not d.has_edge(e) or h not in d.edge_map[e]:
            raise MoveSiteError(f"dart ({e}, {h}) does not exist")
    pa, pb = d.edge_map[e1]
    t1 = pb if h1 == pa else pa
    qa, qb = d.edge_map[e2]
    t2 = qb if h2 == qa else qa

    u = d.c
    v = d.c + 1
    top = max(d.edge_labels(), default=0)
    rest = [edge for edge in d.edges if edge[0] not in (e1, e2)]
    new = [
        (e1, t1, (u, 0)),
        (top + 1, (v, 2), h1),
        (top + 3, (u, 2), (v, 0)),
        (e2, t2, (v, 1)),
        (top + 2, (u, 1), h2),
        (top + 4, (v, 3), (u, 3)),
    ]
    over_v = not over_first  # strand 1 runs through the U ports of both crossings
    crossings = d.crossings + (Crossing(over_v), Crossing(over_v))
    return Diagram(crossings, _normalize_edges(rest + new), d.free_loops)


def r2_add(d: Diagram, e1: int, e2: int, over_first: bool = True) -> Diagram:
    """R2 move along the first face shared by edges ``e1`` and ``e2``."""
    for face in d.faces():
        d1 = next((dart for dart in face if dart[0] == e1), None)
        d2 = next((dart for dart in face if dart[0] == e2), None)
        if d1 is not None and d2 is not None:
            return r2_add_at(d, d1, d2, over_first)
    raise MoveSiteError(f"edges {e1} and {e2} do not share a face")


def bigon_sites(d: Diagram) -> tuple[tuple[int, int], ...]:
    """Crossing pairs (u, v) of removable R2 bigons."""
    out = []
    for face in d.faces():
        if len(face) != 2:
            continue
        (ea, ha), (eb, hb) = face
        u, v = ha[0], hb[0]
        if u == v or ea == eb:
            continue
        # side edge ea sits at port ha[1] of u and at the tail of the
        # first dart, i.e. port (hb[1]+1) of v
        if _is_over(d, u, ha[1]) == _is_over(d, v, (hb[1] + 1) % 4):
            out.append((min(u, v), max(u, v)))
    return tuple(sorted(set(out)))


def r2_remove(d: Diagram, u: int, v: int) -> Diagram:
    """Undo an R2 bigon: both strands pass straight through."""
    if (min(u, v), max(u, v)) not in bigon_sites(d):
        raise MoveSiteError(f"crossings {u}, {v} do not bound a removable bigon")
    return d.erase_crossings({u, v})


# ----------------------------------------------------------------------
# R3

def r3_sites(d: Diagram) -> tuple[tuple[tuple[Dart, Dart, Dart], int], ...]:
    """(face darts, slider side index) for every applicable triangle."""
    out = []
    for face in d.faces():
        if len(face) != 3:
            continue
        crossings = [h[0] for _, h in face]
        edges = [e for e, _ in face]
        if len(set(crossings)) != 3 or len(set(edges)) != 3:
            continue
        for k in range(3):
            # side k runs from crossing k-1 to crossing k
            y = face[(k - 1) % 3][1]
            z = face[k][1]
            ya = (y[1] + 1) % 4
            za = z[1]
            if _is_over(d, y[0], ya) == _is_over(d, z[0], za):
                out.append((tuple(face), k))
    return tuple(out)


def r3_apply(d: Diagram, face: Sequence[Dart], slider: int) -> Diagram:
    """Slide the strand of side ``slider`` across the opposite crossing.

    Pure rewiring: eight edge endpoints swap places; crossings, over
    flags, labels, component count, and writhe are all preserved.
    """
    if (tuple(face), slider) not in r3_sites(d):
        raise MoveSiteError("not an applicable R3 site")
    hy = face[(slider - 1) % 3][1]
    hz = face[slider][1]
    hx = face[(slider + 1) % 3][1]
    Y, y_b = hy[0], hy[1]
    Z, z_a = hz[0], hz[1]
    X, x_c = hx[0], hx[1]
    y_a = (y_b + 1) % 4
    z_c = (z_a + 1) % 4
    x_b = (x_c + 1) % 4

    sub: dict[Port, Port] = {
        (X, x_b): (X, (x_b + 2) % 4),
        (X, (x_b + 2) % 4): (Y, (y_b + 2) % 4),
        (Y, (y_b + 2) % 4): (X, x_b),
        (X, x_c): (X, (x_c + 2) % 4),
        (X, (x_c + 2) % 4): (Z, (z_c + 2) % 4),
        (Z, (z_c + 2) % 4): (X, x_c),
        (Y, (y_a + 2) % 4): (Z, (z_a + 2) % 4),
        (Z, (z_a + 2) % 4): (Y, (y_a + 2) % 4),
    }
    edges = [
        (label, sub.get(a, a), sub.get(b, b)) for label, a, b in d.edges
    ]
    return Diagram(d.crossings, _normalize_edges(edges), d.free_loops)


# ----------------------------------------------------------------------
# traces and walks

@dataclass(frozen=True)
class MoveStep:
    """One replayable move; ``data`` holds the site exactly as applied."""

    kind: str
    data: tuple

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "data": _jsonify(self.data)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MoveStep":
        return cls(obj["kind"], _unjsonify(obj["data"]))


def _jsonify(x):
    if isinstance(x, tuple):
        return [_jsonify(v) for v in x]
    return x


def _unjsonify(x):
    if isinstance(x, list):
        return tuple(_unjsonify(v) for v in x)
    return x


@dataclass(frozen=True)
class MoveTrace:
    """A replayable move sequence with its net signed R1 count."""

    start_pd: str
    steps: tuple[MoveStep, ...]
    net_r1: int

    def to_json_obj(self) -> dict:
        return {
            "start": self.start_pd,
            "net_r1": self.net_r1,
            "steps": [s.to_json_obj() for s in self.steps],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MoveTrace":
        return cls(
            obj["start"],
            tuple(MoveStep.from_json_obj(s) for s in obj["steps"]),
            obj["net_r1"],
        )


def apply_step(d: Diagram, step: MoveStep) -> Diagram:
    if step.kind == "r1_add":
        e, chirality, side = step.data
        return r1_add(d, e, chirality, side)
    if step.kind == "r1_remove":
        (p,) = step.data
        return r1_remove(d, p)
    if step.kind == "r2_add":
        dart1, dart2, over_first = step.data
        return r2_add_at(d, dart1, dart2, over_first)
    if step.kind == "r2_remove":
        u, v = step.data
        return r2_remove(d, u, v)
    if step.kind == "r3":
        face, slider = step.data
        return r3_apply(d, face, slider)
    raise MoveSiteError(f"unknown move kind {step.kind!r}")


def replay(d: Diagram, steps: Iterable[MoveStep]) -> Diagram:
    for step in steps:
        d = apply_step(d, step)
    return d


def _candidate_steps(d: Diagram, max_c: int) -> dict[str, list[MoveStep]]:
    out: dict[str, list[MoveStep]] = {}
    if d.c + 1 <= max_c:
        refs: list[EdgeRef] = list(d.edge_labels())
        if d.free_loops:
            refs.append(None)
        out["r1_add"] = [
            MoveStep("r1_add", (e, ch, side))
            for e in refs
            for ch in ("+", "-")
            for side in ("L", "R")
        ]
    kinks = kink_sites(d)
    if kinks:
        out["r1_remove"] = [MoveStep("r1_remove", (ci,)) for ci, _, _ in kinks]
    if d.c + 2 <= max_c:
        pairs = cofacial_dart_pairs(d)
        if pairs:
            out["r2_add"] = [
                MoveStep("r2_add", (d1, d2, over))
                for d1, d2 in pairs
                for over in (True, False)
            ]
    bigons = bigon_sites(d)
    if bigons:
        out["r2_remove"] = [MoveStep("r2_remove", (u, v)) for u, v in bigons]
    triangles = r3_sites(d)
    if triangles:
        out["r3"] = [MoveStep("r3", (face, k)) for face, k in triangles]
    return out


def _step_r1_delta(d: Diagram, step: MoveStep) -> int:
    if step.kind == "r1_add":
        return 1 if step.data[1] == "+" else -1
    if step.kind == "r1_remove":
        return -kink_sign(d, step.data[0])
    return 0


def random_move_walk(
    d: Diagram, steps: int, seed: int, max_c: int
) -> tuple[Diagram, MoveTrace]:
    """Apply ``steps`` seeded random moves, never exceeding ``max_c``
    crossings; returns the end diagram and a bit-exact replayable trace."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = random.Random(seed)
    taken: list[MoveStep] = []
    net_r1 = 0
    cur = d
    for _ in range(steps):
        cands = _candidate_steps(cur, max_c)
        if not cands:
            continue
        kind = rng.choice(sorted(cands))
        step = rng.choice(cands[kind])
        net_r1 += _step_r1_delta(cur, step)
        cur = apply_step(cur, step)
        taken.append(step)
    return cur, MoveTrace(d.to_pd(), tuple(taken), net_r1)


def random_diagram(seed: int, max_c: int, walk_steps: int = 12) -> Diagram:
    """A seeded pseudo-random planar diagram: a move walk from the
    zero-crossing unknot followed by coin-flip crossing changes."""
    start = Diagram((), (), 1)
    end, _ = random_move_walk(start, walk_steps, seed, max_c)
    rng = random.Random(f"flips:{seed}")
    for p in range(end.c):
        if rng.random() < 0.5:
            end = end.crossing_change(p)
    return end
