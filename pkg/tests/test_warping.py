"""Base sequences, first encounters, and warping degree."""

import itertools

import pytest

from kauffpoly.diagram import Diagram, DiagramError, parse_pd
from kauffpoly.moves import random_diagram
from kauffpoly.warping import (
    BaseEntry,
    BaseSequence,
    base_orientation,
    canonical_base,
    complexity,
    enumerate_bases,
    first_encounter,
    induced_writhe,
    is_monotone,
    validate_base,
    warping_degree,
    warping_set,
)

KINK = "X(1,2,2,1)"
HOPF = "X(1,4,2,3) X(3,2,4,1)"
TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def kink_base(toward):
    return BaseSequence((BaseEntry(0, toward[0], toward[1]),))


class TestFirstEncounter:
    def test_kink_over_arc_first(self):
        kink = parse_pd(KINK)
        # heading at port (0,3) meets the over strand (V) first
        enc = first_encounter(kink, kink_base((1, (0, 3))))
        assert enc == ((0, 1),)

    def test_kink_under_arc_first(self):
        kink = parse_pd(KINK)
        enc = first_encounter(kink, kink_base((1, (0, 0))))
        assert enc == ((0, 0),)

    def test_hopf_first_component_always_first(self):
        hopf = parse_pd(HOPF)
        for base in enumerate_bases(hopf):
            for ci, parity in first_encounter(hopf, base):
                comp, _ = hopf.strand_arrivals[(ci, parity)]
                assert comp == 0  # traversal order follows the tuple order

    def test_unchanged_by_crossing_change(self):
        for seed in range(10):
            d = random_diagram(seed, 6)
            base = canonical_base(d)
            enc = first_encounter(d, base)
            for p in range(d.c):
                assert first_encounter(d.crossing_change(p), base) == enc


class TestWarpingDegree:
    def test_zero_crossing_monotone(self):
        assert is_monotone(parse_pd("O"), canonical_base(parse_pd("O")))
        assert warping_degree(parse_pd("O O"), canonical_base(parse_pd("O O"))) == 0

    def test_kink_depends_on_base(self):
        kink = parse_pd(KINK)
        degrees = [warping_degree(kink, b) for b in enumerate_bases(kink)]
        assert sorted(degrees) == [0, 0, 1, 1]
        assert is_monotone(kink, kink_base((1, (0, 3))))
        assert warping_degree(kink, kink_base((1, (0, 0)))) == 1

    def test_trefoil_never_monotone(self):
        tre = parse_pd(TREFOIL)
        degrees = {warping_degree(tre, b) for b in enumerate_bases(tre)}
        assert degrees == {1, 2}

    def test_bounded_by_crossings(self):
        for seed in range(12):
            d = random_diagram(seed, 6)
            for base in itertools.islice(enumerate_bases(d), 8):
                assert 0 <= warping_degree(d, base) <= d.c

    def test_crossing_change_at_warping_drops_degree(self):
        for seed in range(12):
            d = random_diagram(seed, 6)
            base = canonical_base(d)
            ws = warping_set(d, base)
            for p in ws:
                flipped = d.crossing_change(p)
                assert warping_degree(flipped, base) == len(ws) - 1
                assert warping_set(flipped, base) == ws - {p}

    def test_complexity_pair(self):
        tre = parse_pd(TREFOIL)
        c, s = complexity(tre)
        assert c == 3 and s in (1, 2)


class TestBases:
    def test_unknot_unique_empty_base(self):
        O = parse_pd("O")
        bases = list(enumerate_bases(O))
        assert bases == [BaseSequence((BaseEntry(0, None, None),))]
        assert canonical_base(O) == bases[0]

    def test_kink_has_four_bases(self):
        assert len(list(enumerate_bases(parse_pd(KINK)))) == 4

    def test_hopf_base_count(self):
        # 2 components x (2 edges x 2 directions) each, fixed tuple order
        assert len(list(enumerate_bases(parse_pd(HOPF)))) == 16

    def test_canonical_base_is_shadow_determined(self):
        for seed in range(10):
            d = random_diagram(seed, 6)
            base = canonical_base(d)
            for p in range(d.c):
                assert canonical_base(d.crossing_change(p)) == base
            assert canonical_base(d.mirror()) == base

    def test_validate_rejects_wrong_component(self):
        hopf = parse_pd(HOPF)
        base = canonical_base(hopf)
        swapped = BaseSequence(
            (
                BaseEntry(0, base.entries[1].edge, base.entries[1].toward),
                base.entries[1],
            )
        )
        with pytest.raises(DiagramError):
            validate_base(hopf, swapped)

    def test_validate_rejects_missing_component(self):
        hopf = parse_pd(HOPF)
        base = canonical_base(hopf)
        with pytest.raises(DiagramError):
            validate_base(hopf, BaseSequence((base.entries[0],)))

    def test_permuted_entry_order_is_valid(self):
        hopf = parse_pd(HOPF)
        base = canonical_base(hopf)
        validate_base(hopf, BaseSequence(tuple(reversed(base.entries))))


class TestOrientation:
    def test_base_orientation_signs(self):
        kink = parse_pd(KINK)
        plus = base_orientation(kink, canonical_base(kink))
        assert plus == (1,)
        other = kink_base((1, (0, 3)))
        assert base_orientation(kink, other) in ((1,), (-1,))

    def test_induced_writhe_matches_direct(self):
        for seed in range(10):
            d = random_diagram(seed, 6)
            base = canonical_base(d)
            assert induced_writhe(d, base) == d.writhe(base_orientation(d, base))

    def test_writhe_direction_independent_when_monotone(self):
        # stacked descending diagrams have zero linking between components,
        # so every base direction induces the same writhe
        for seed in range(30):
            d = random_diagram(seed, 5)
            for base in itertools.islice(enumerate_bases(d), 16):
                if warping_degree(d, base) == 0:
                    w = induced_writhe(d, base)
                    for base2 in itertools.islice(enumerate_bases(d), 16):
                        if warping_degree(d, base2) == 0:
                            assert induced_writhe(d, base2) == w
