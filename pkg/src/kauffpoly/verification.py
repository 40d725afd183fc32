"""Per-diagram verification suites backing ``kauffpoly verify``.

Each check is a named boolean; a diagram report collects them together
with the basic counts.  The catalog suite additionally runs the product
laws across diagram pairs.  Everything here is deterministic: sampling
uses fixed seeds.
"""

from __future__ import annotations

import itertools
import random
from typing import Mapping

from .catalog import CATALOG, CatalogEntry
from .coeffs import Cache, coeff_table, coeff_table_with_base, skein_check
from .diagram import Diagram
from .laurent import LaurentPoly
from .moves import r1_add
from .oracle import OracleCache, agree_at_y_one, oracle_L, uniqueness_check
from .series import check_L_skein, check_product_laws, kauffman_F, kauffman_L
from .warping import (
    canonical_base,
    enumerate_bases,
    is_monotone,
    induced_writhe,
    warping_degree,
    warping_order,
)

#: Full base enumeration is attempted up to this many crossings.
FULL_BASE_LIMIT_C = 5
#: And up to this many base sequences; larger diagrams get a seeded sample.
BASE_SAMPLE = 16


def check_tag(d: Diagram, tag: str) -> bool:
    """Evaluate one catalog property tag."""
    if tag.startswith("r="):
        return d.r == int(tag[2:])
    if tag.startswith("c="):
        return d.c == int(tag[2:])
    if tag.startswith("writhe="):
        return induced_writhe(d, canonical_base(d)) == int(tag[7:])
    if tag == "monotone":
        return is_monotone(d, canonical_base(d))
    if tag == "amphichiral":
        f = kauffman_F(d, (1,) * d.r)
        return f == f.subst_y_inverse()
    raise ValueError(f"unknown catalog tag {tag!r}")


def _bases_to_try(d: Diagram):
    bases = list(enumerate_bases(d))
    if d.c <= FULL_BASE_LIMIT_C or len(bases) <= BASE_SAMPLE:
        return bases
    rng = random.Random("bases:" + d.to_pd())
    return rng.sample(bases, BASE_SAMPLE)


def verify_diagram(
    d: Diagram,
    *,
    name: str | None = None,
    tags: tuple[str, ...] = (),
    budget: int | None = None,
    cache: Cache | None = None,
    oracle_cache: OracleCache | None = None,
) -> dict:
    """Run the full single-diagram check suite and return a report."""
    checks: dict[str, bool] = {}
    table = coeff_table(d, budget=budget, cache=cache)

    checks["planar_rotation_system"] = d.is_planar()
    checks["pd_roundtrip"] = _pd_roundtrip_ok(d)

    bounds = table.support_bounds()
    checks["support_lower_bound"] = bounds is None or bounds[0] >= 0
    checks["support_upper_bound"] = bounds is None or bounds[1] <= d.c + d.r - 1

    checks["skein_coefficients"] = all(
        skein_check(d, p, budget=budget, cache=cache) for p in range(d.c)
    )
    checks["skein_series"] = all(
        check_L_skein(d, p, budget=budget, cache=cache) for p in range(d.c)
    )

    checks["base_independence"] = all(
        coeff_table_with_base(d, base, budget=budget, cache=cache) == table
        for base in _bases_to_try(d)
    )
    base = canonical_base(d)
    checks["warping_choice_independence"] = all(
        coeff_table_with_base(d, base, warping_crossing=p, budget=budget, cache=cache)
        == table
        for p in warping_order(d, base)
    )

    checks["oracle_equality"] = uniqueness_check(
        d, budget=budget, cache=oracle_cache, table_cache=cache
    )
    checks["oracle_equality_at_y1"] = agree_at_y_one(
        d, budget=budget, cache=oracle_cache, table_cache=cache
    )

    f = kauffman_F(d, (1,) * d.r, budget=budget, cache=cache)
    f_mirror = kauffman_F(d.mirror(), (1,) * d.r, budget=budget, cache=cache)
    checks["mirror_symmetry"] = f_mirror == f.subst_y_inverse()

    checks["kink_scaling"] = _kink_scaling_ok(d, budget, cache)

    for tag in tags:
        checks[f"tag:{tag}"] = check_tag(d, tag)

    return {
        "name": name or d.to_pd() or "(empty)",
        "pd": d.to_pd(),
        "c": d.c,
        "r": d.r,
        "warping_degree": warping_degree(d, base),
        "checks": checks,
        "ok": all(checks.values()),
    }


def _pd_roundtrip_ok(d: Diagram) -> bool:
    from .diagram import parse_pd

    reparsed = parse_pd(d.to_pd())
    return reparsed.to_pd() == d.to_pd() and coeff_table(reparsed) == coeff_table(d)


def _kink_scaling_ok(d: Diagram, budget, cache) -> bool:
    base = kauffman_L(d, budget=budget, cache=cache)
    site = d.edge_labels()[0] if d.edge_labels() else None
    for chirality, shift in (("+", 1), ("-", -1)):
        kinked = r1_add(d, site, chirality)
        if kauffman_L(kinked, budget=budget, cache=cache) != base.shift_y(shift):
            return False
    return True


def verify_catalog(
    *,
    budget: int | None = None,
    cache: Cache | None = None,
    oracle_cache: OracleCache | None = None,
    product_partners: tuple[str, ...] = ("kink_pos", "kink_neg", "hopf", "trefoil"),
) -> tuple[bool, list[dict]]:
    """Verify every catalog entry, then the product laws across pairs."""
    cache = {} if cache is None else cache
    oracle_cache = {} if oracle_cache is None else oracle_cache
    reports = [
        verify_diagram(
            entry.diagram(),
            name=entry.name,
            tags=entry.known_properties,
            budget=budget,
            cache=cache,
            oracle_cache=oracle_cache,
        )
        for entry in CATALOG.values()
    ]

    product_ok = True
    pair_checks: dict[str, bool] = {}
    for n1, n2 in itertools.combinations_with_replacement(product_partners, 2):
        ok = check_product_laws(
            CATALOG[n1].diagram(), CATALOG[n2].diagram(), budget=budget, cache=cache
        )
        pair_checks[f"product_laws:{n1},{n2}"] = ok
        product_ok = product_ok and ok
    reports.append(
        {
            "name": "catalog-pairs",
            "checks": pair_checks,
            "ok": product_ok,
        }
    )
    return all(rep["ok"] for rep in reports), reports
