"""The coefficient-table engine.

``coeff_table(D)`` computes the family of one-variable polynomials whose
generating series (see :mod:`kauffpoly.series`) is the regular-isotopy
Kauffman polynomial of the diagram.  The recursion runs on the
lexicographic pair (crossing count, warping degree):

* warping degree 0: entry ``n`` is the closed form
  ``y^w * (-1)^n * C(r-1, n) * (y + y^-1)^(r-n-1)``, with the writhe
  taken under the traversal orientation;
* otherwise, at a warping crossing ``p`` with splice component shifts
  ``sA = r(D_A) - r(D)`` and ``sB = r(D_B) - r(D)``::

      T[n](D) = -T[n](flip p) + T[n + sA - 1](A-splice) + T[n + sB - 1](B-splice)

  taking fresh canonical bases on every sub-diagram.

The canonical base depends only on the underlying projection, so the
flip branch reuses the same base and strictly drops the warping degree;
the splice branches strictly drop the crossing count.  Termination is
therefore unconditional, but the tree is exponential, so a node budget
converts runaway inputs into a clean error.

All functions are pure; the optional cache maps diagrams to finished
tables and may be shared freely (results are identical with or without
it, which the test suite checks).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import MutableMapping

from .diagram import Diagram, DiagramError
from .laurent import LaurentPoly, monotone_coeff
from .warping import (
    BaseSequence,
    base_orientation,
    canonical_base,
    first_encounter,
    validate_base,
)

logger = logging.getLogger(__name__)

#: Default cap on the number of recursion nodes.
DEFAULT_BUDGET = 10**8

Cache = MutableMapping[Diagram, "CoeffTable"]


class BudgetExceededError(RuntimeError):
    """The recursion node budget ran out."""

    def __init__(self, d: Diagram, limit: int):
        self.crossings = d.c
        self.components = d.r
        self.limit = limit
        super().__init__(
            f"recursion budget of {limit} nodes exhausted while expanding a "
            f"diagram with {d.c} crossings and {d.r} components"
        )


class _Budget:
    __slots__ = ("remaining", "limit")

    def __init__(self, limit: int):
        self.remaining = limit
        self.limit = limit

    def spend(self, d: Diagram) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExceededError(d, self.limit)


@dataclass(frozen=True)
class CoeffTable:
    """Finite map index -> nonzero polynomial; absent indices read as zero."""

    entries: tuple[tuple[int, LaurentPoly], ...]

    @classmethod
    def from_dict(cls, data: dict[int, LaurentPoly]) -> "CoeffTable":
        return cls(tuple(sorted((n, p) for n, p in data.items() if p)))

    def __getitem__(self, n: int) -> LaurentPoly:
        for k, p in self.entries:
            if k == n:
                return p
        return LaurentPoly.zero()

    def items(self):
        return iter(self.entries)

    def as_dict(self) -> dict[int, LaurentPoly]:
        return dict(self.entries)

    def support_bounds(self) -> tuple[int, int] | None:
        """(min index, max index) of the nonzero entries, or None if empty."""
        if not self.entries:
            return None
        return (self.entries[0][0], self.entries[-1][0])

    def shifted(self, k: int) -> "CoeffTable":
        """Reindex ``n -> n + k``."""
        return CoeffTable(tuple((n + k, p) for n, p in self.entries))

    def __neg__(self) -> "CoeffTable":
        return CoeffTable(tuple((n, -p) for n, p in self.entries))

    def __add__(self, other: "CoeffTable") -> "CoeffTable":
        acc = dict(self.entries)
        for n, p in other.entries:
            s = acc.get(n, LaurentPoly.zero()) + p
            if s:
                acc[n] = s
            else:
                acc.pop(n, None)
        return CoeffTable.from_dict(acc)

    def to_json_obj(self) -> dict[str, str]:
        return {str(n): str(p) for n, p in self.entries}

    def __str__(self) -> str:
        return "; ".join(f"{n}: {p}" for n, p in self.entries) or "(zero)"


def _monotone_table(d: Diagram, base: BaseSequence) -> CoeffTable:
    if d.c > 0 and (len(d.connected_pieces()) > 1 or d.free_loops):
        # Reaching a split warping-degree-0 diagram is worth noting: the
        # closed form covers it, but such leaves are structurally richer
        # than a single descending piece.
        logger.debug(
            "warping-degree-0 leaf is disconnected: c=%d r=%d pd=%s",
            d.c,
            d.r,
            d.to_pd(),
        )
    w = d.writhe(base_orientation(d, base))
    r = d.r
    return CoeffTable.from_dict({n: monotone_coeff(w, n, r) for n in range(r)})


def _expand(
    d: Diagram,
    base: BaseSequence,
    pick: int | None,
    budget: _Budget,
    cache: Cache | None,
) -> CoeffTable:
    warping = [
        ci
        for ci, parity in first_encounter(d, base)
        if (parity == 1) != d.crossings[ci].over_v
    ]
    if pick is not None and pick not in warping:
        raise DiagramError(f"crossing {pick} is not a warping crossing of this base")
    if not warping:
        return _monotone_table(d, base)
    p = warping[0] if pick is None else pick

    flipped = _table(d.crossing_change(p), budget, cache)
    da = d.splice(p, "A")
    db = d.splice(p, "B")
    shift_a = 1 - (da.r - d.r)
    shift_b = 1 - (db.r - d.r)
    ta = _table(da, budget, cache)
    tb = _table(db, budget, cache)
    return (-flipped) + ta.shifted(shift_a) + tb.shifted(shift_b)


def _table(d: Diagram, budget: _Budget, cache: Cache | None) -> CoeffTable:
    if cache is not None:
        hit = cache.get(d)
        if hit is not None:
            return hit
    budget.spend(d)
    result = _expand(d, canonical_base(d), None, budget, cache)
    if cache is not None:
        cache[d] = result
    return result


def coeff_table(
    d: Diagram,
    *,
    budget: int | None = None,
    cache: Cache | None = None,
) -> CoeffTable:
    """Coefficient table of a diagram under the canonical base.

    Parameters
    ----------
    d : Diagram
    budget : int, optional
        Cap on recursion nodes (default ``DEFAULT_BUDGET``); exceeding it
        raises :class:`BudgetExceededError`.
    cache : mutable mapping, optional
        Diagram -> table memo, shared across calls at the caller's
        discretion.  Off by default.
    """
    return _table(d, _Budget(DEFAULT_BUDGET if budget is None else budget), cache)


def coeff_table_with_base(
    d: Diagram,
    base: BaseSequence,
    *,
    warping_crossing: int | None = None,
    budget: int | None = None,
    cache: Cache | None = None,
) -> CoeffTable:
    """Coefficient table seeded with a caller-supplied base sequence.

    The top-level monotone test, writhe, and warping-crossing choice use
    ``base``; sub-diagrams take fresh canonical bases.  Passing
    ``warping_crossing`` overrides the default earliest-first choice,
    which lets tests confirm that every choice yields the same table.
    """
    validate_base(d, base)
    b = _Budget(DEFAULT_BUDGET if budget is None else budget)
    b.spend(d)
    return _expand(d, base, warping_crossing, b, cache)


def skein_check(
    d: Diagram,
    p: int,
    *,
    budget: int | None = None,
    cache: Cache | None = None,
) -> bool:
    """Verify the four-term relation entrywise at crossing ``p``:
    the tables of the diagram and its flip sum to the shifted tables of
    the two splices."""
    d._check_crossing(p)
    b = DEFAULT_BUDGET if budget is None else budget
    lhs = coeff_table(d, budget=b, cache=cache) + coeff_table(
        d.crossing_change(p), budget=b, cache=cache
    )
    da = d.splice(p, "A")
    db = d.splice(p, "B")
    rhs = coeff_table(da, budget=b, cache=cache).shifted(1 - (da.r - d.r)) + coeff_table(
        db, budget=b, cache=cache
    ).shifted(1 - (db.r - d.r))
    if lhs != rhs:
        logger.warning(
            "four-term relation fails at crossing %d of %s: lhs=%s rhs=%s",
            p,
            d.to_pd(),
            lhs,
            rhs,
        )
        return False
    return True
