"""Coefficient engine: closed forms, skein identities, independence."""

import itertools

import pytest

from kauffpoly.coeffs import (
    BudgetExceededError,
    CoeffTable,
    coeff_table,
    coeff_table_with_base,
    skein_check,
)
from kauffpoly.diagram import Diagram, DiagramError, parse_pd
from kauffpoly.laurent import LaurentPoly, monotone_coeff
from kauffpoly.moves import random_diagram
from kauffpoly.oracle import oracle_L
from kauffpoly.warping import BaseSequence, canonical_base, enumerate_bases, warping_order

KINK = "X(1,2,2,1)"
KINK_NEG = "X(2,2,1,1)"
HOPF = "X(1,4,2,3) X(3,2,4,1)"
TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def unlink(r: int) -> Diagram:
    return Diagram((), (), r)


class TestClosedForms:
    def test_unknot_is_kronecker_delta(self):
        assert coeff_table(parse_pd("O")) == CoeffTable.from_dict({0: LaurentPoly.one()})

    def test_two_component_unlink(self):
        expected = CoeffTable.from_dict(
            {0: LaurentPoly({1: 1, -1: 1}), 1: LaurentPoly({0: -1})}
        )
        assert coeff_table(unlink(2)) == expected

    @pytest.mark.parametrize("r", range(1, 9))
    def test_trivial_links_match_closed_form(self, r):
        table = coeff_table(unlink(r))
        for n in range(-2, r + 2):
            assert table[n] == monotone_coeff(0, n, r)

    def test_positive_kink(self):
        assert coeff_table(parse_pd(KINK)) == CoeffTable.from_dict(
            {0: LaurentPoly.monomial(1)}
        )

    def test_negative_kink(self):
        assert coeff_table(parse_pd(KINK_NEG)) == CoeffTable.from_dict(
            {0: LaurentPoly.monomial(-1)}
        )


class TestMonotoneClosedForm:
    def test_degree_zero_bases_give_closed_form(self):
        from kauffpoly.warping import (
            enumerate_bases,
            induced_writhe,
            warping_degree,
        )

        for seed in range(20):
            d = random_diagram(seed, 5)
            for base in enumerate_bases(d):
                if warping_degree(d, base) != 0:
                    continue
                w = induced_writhe(d, base)
                table = coeff_table_with_base(d, base)
                for n in range(d.r):
                    assert table[n] == monotone_coeff(w, n, d.r)

    def test_connected_sums_of_monotone_diagrams(self):
        # summands are descending under some base; their sum usually is
        # not, so the engine really recurses, yet the closed form with
        # the total writhe and component count must come out
        from kauffpoly.diagram import connected_sum
        from kauffpoly.warping import canonical_base, warping_degree

        kink_pos = parse_pd(KINK)
        kink_neg = parse_pd(KINK_NEG)
        clasp = parse_pd(HOPF).crossing_change(0)  # one strand fully on top
        summands = {
            "kink+": (kink_pos, 1),
            "kink-": (kink_neg, -1),
            "clasp": (clasp, 0),
        }
        recursed = False
        for (d1, w1), (d2, w2) in itertools.product(summands.values(), repeat=2):
            for e in d1.edge_labels():
                for e2 in d2.edge_labels():
                    total = connected_sum(d1, d2, e, e2)
                    recursed = recursed or warping_degree(
                        total, canonical_base(total)
                    ) > 0
                    table = coeff_table(total)
                    w = w1 + w2
                    for n in range(-1, total.r + 1):
                        assert table[n] == monotone_coeff(w, n, total.r)
        assert recursed, "every sum was already descending; test is vacuous"


class TestDerivedTables:
    def test_trefoil_matches_oracle_coefficients(self):
        # read entry n off the independent whole-polynomial evaluator as
        # the z^(n+1-r) coefficient
        tre = parse_pd(TREFOIL)
        reference = oracle_L(tre)
        table = coeff_table(tre)
        for n in range(-2, tre.c + tre.r + 2):
            assert table[n] == reference.z_coefficient(n + 1 - tre.r)

    @pytest.mark.parametrize("pd", [HOPF, FIGURE8])
    def test_small_diagrams_match_oracle_coefficients(self, pd):
        d = parse_pd(pd)
        reference = oracle_L(d)
        table = coeff_table(d)
        for n in range(0, d.c + d.r):
            assert table[n] == reference.z_coefficient(n + 1 - d.r)


class TestBaseIndependence:
    def test_unknot_unique_base(self):
        O = parse_pd("O")
        (base,) = enumerate_bases(O)
        assert coeff_table_with_base(O, base) == coeff_table(O)

    @pytest.mark.parametrize("pd", [KINK, HOPF, TREFOIL])
    def test_all_bases_agree(self, pd):
        d = parse_pd(pd)
        expected = coeff_table(d)
        for base in enumerate_bases(d):
            assert coeff_table_with_base(d, base) == expected

    def test_warping_crossing_choice_is_free(self):
        for seed in range(15):
            d = random_diagram(seed, 6)
            base = canonical_base(d)
            expected = coeff_table(d)
            for p in warping_order(d, base):
                assert coeff_table_with_base(d, base, warping_crossing=p) == expected

    def test_non_warping_crossing_rejected(self):
        kink = parse_pd(KINK)
        base = next(
            b for b in enumerate_bases(kink) if not warping_order(kink, b)
        )
        with pytest.raises(DiagramError):
            coeff_table_with_base(kink, base, warping_crossing=0)

    def test_component_order_permutations_agree(self):
        hopf = parse_pd(HOPF)
        expected = coeff_table(hopf)
        base = canonical_base(hopf)
        for perm in itertools.permutations(base.entries):
            assert coeff_table_with_base(hopf, BaseSequence(perm)) == expected


class TestSkein:
    def test_kink(self):
        assert skein_check(parse_pd(KINK), 0)

    def test_hopf_and_trefoil_all_crossings(self):
        for pd in (HOPF, TREFOIL):
            d = parse_pd(pd)
            assert all(skein_check(d, p) for p in range(d.c))

    def test_randoms(self):
        cache = {}
        for seed in range(25):
            d = random_diagram(seed, 6)
            assert all(skein_check(d, p, cache=cache) for p in range(d.c))

    def test_detects_table_mismatch(self, monkeypatch):
        # a perturbed table for the input diagram must trip the comparison
        import kauffpoly.coeffs as coeffs_mod

        hopf = parse_pd(HOPF)
        real = coeffs_mod.coeff_table.__wrapped__ if hasattr(
            coeffs_mod.coeff_table, "__wrapped__"
        ) else coeffs_mod.coeff_table

        def corrupted(d, **kwargs):
            table = real(d, **kwargs)
            if d == hopf:
                return table + CoeffTable.from_dict({7: LaurentPoly.one()})
            return table

        monkeypatch.setattr(coeffs_mod, "coeff_table", corrupted)
        assert not coeffs_mod.skein_check(hopf, 0)

    def test_leaf_corruption_caught_by_oracle(self, monkeypatch):
        # the whole-polynomial evaluator has its own base case, so it
        # notices when the table engine's closed form goes wrong
        import kauffpoly.coeffs as coeffs_mod
        from kauffpoly.oracle import uniqueness_check

        real = coeffs_mod.monotone_coeff
        monkeypatch.setattr(
            coeffs_mod,
            "monotone_coeff",
            lambda w, n, r: real(w + (1 if r > 1 else 0), n, r),
        )
        assert not uniqueness_check(parse_pd(HOPF))


class TestSupportAndTable:
    def test_unknot_bounds(self):
        assert coeff_table(parse_pd("O")).support_bounds() == (0, 0)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_unlink_bounds(self, r):
        assert coeff_table(unlink(r)).support_bounds() == (0, r - 1)

    def test_random_tables_within_bounds(self):
        cache = {}
        for seed in range(40):
            d = random_diagram(seed, 6)
            bounds = coeff_table(d, cache=cache).support_bounds()
            assert bounds is not None
            lo, hi = bounds
            assert lo >= 0
            assert hi <= d.c + d.r - 1

    def test_lookup_outside_support_is_zero(self):
        table = coeff_table(parse_pd(KINK))
        assert table[5] == LaurentPoly.zero()
        assert table[-1] == LaurentPoly.zero()

    def test_table_json(self):
        assert coeff_table(unlink(2)).to_json_obj() == {"0": "y^-1 + y", "1": "-1"}

    def test_shift_and_add(self):
        t = coeff_table(unlink(2))
        assert (t.shifted(2))[2] == t[0]
        assert (t + (-t)) == CoeffTable.from_dict({})


class TestBudgetAndCache:
    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError) as err:
            coeff_table(parse_pd(TREFOIL), budget=2)
        assert err.value.crossings == 3
        assert err.value.limit == 2

    def test_budget_error_carries_size(self):
        with pytest.raises(BudgetExceededError) as err:
            coeff_table(parse_pd(FIGURE8), budget=1)
        assert "4 crossings" in str(err.value)

    def test_cache_matches_reference_path(self):
        for seed in range(15):
            d = random_diagram(seed, 6)
            assert coeff_table(d, cache={}) == coeff_table(d)

    def test_shared_cache_across_calls(self):
        cache = {}
        tre = parse_pd(TREFOIL)
        first = coeff_table(tre, cache=cache)
        assert cache
        assert coeff_table(tre, cache=cache) == first
