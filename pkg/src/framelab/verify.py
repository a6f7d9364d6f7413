"""Named verification suites: each replays one headline computation end to end.

Every suite returns a list of CheckResult records; callers render one
pass/fail line per check.  The suites are also the backing for the
acceptance test module.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from .arith import is_prime
from .diffsets import classify, difference_counts, pds_zero_toggle, reversal, translate
from .errors import DomainError
from .frames import (
    FrameSpec,
    angle_profile,
    btf_multiplicities_from_angles,
    classify_angularity,
    verify_modulation_identities,
    welch_bound,
)
from .groups import GroupSpec, parse_group, parse_subset
from .predictions import (
    dds_angles,
    gaussian_angles,
    quartic_family_angles,
    run_all_table_checks,
)
from .residues import (
    gauss_sum,
    gauss_sum_closed_form,
    half_gauss_sum,
    half_gauss_sum_closed_form,
    paley_pds,
    quartic_coset_decomposition,
    quartic_gaussian_ds,
    quartic_special_cases,
)
from .search import SearchJob, abelian_groups_of_order, cross_group_angle_match, enumerate_and_classify


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail)


# ---------------------------------------------------------------------------
# Suites


def suite_exhaustion_order8(jobs: int = 1) -> list[CheckResult]:
    """3-subsets of the order-8 groups matching the angle set {1/3, sqrt(5)/3}."""
    t0 = time.perf_counter()
    target = (1 / 3, math.sqrt(5) / 3)
    rep = cross_group_angle_match(8, 3, target, tol=1e-7, jobs=jobs)
    expected = {"Z2xZ2xZ2": 0, "Z2xZ4": 32, "Z8": 16}
    out = []
    for grp in rep["groups"]:
        name = grp["group"]
        want = expected[name]
        out.append(
            _check(
                f"exhaustion-order8/{name}-count",
                grp["match_count"] == want,
                f"found {grp['match_count']} matches, expected {want}",
            )
        )
        out.append(
            _check(
                f"exhaustion-order8/{name}-all-proper-nested",
                grp["proper_chain_matches"] == grp["match_count"],
                f"{grp['proper_chain_matches']}/{grp['match_count']} proper chains",
            )
        )
        out.append(
            _check(
                f"exhaustion-order8/{name}-no-bidifference",
                grp["bidifference_matches"] == 0,
                f"{grp['bidifference_matches']} bidifference matches",
            )
        )
    # every Z2xZ4 / Z8 match is an (8,3,3) chain
    for gname in ("Z2xZ4", "Z8"):
        g = parse_group(gname)
        job = SearchJob(g, 3, target_angles=target, jobs=jobs)
        report = enumerate_and_classify(job)
        ts = {r.flags.get("t") for r in report.records}
        out.append(
            _check(
                f"exhaustion-order8/{gname}-chain-length",
                ts == {3},
                f"chain lengths: {sorted(ts)}",
            )
        )
    elapsed = time.perf_counter() - t0
    out.append(_check("exhaustion-order8/runtime", elapsed < 1.0, f"{elapsed:.3f}s"))
    return out


def suite_z6_example() -> list[CheckResult]:
    """The (6,3,2,2,1) set {0,1,3}: classification, angles, multiplicities."""
    t0 = time.perf_counter()
    g = parse_group("Z6")
    S = parse_subset(g, "0,1,3")
    cls = classify(g, S)
    out = []
    d = cls.divisible
    got = None if d is None else (cls.n, cls.m, d.l, d.lam, d.mu)
    out.append(
        _check("z6/divisible-params", got == (6, 3, 2, 2, 1), f"classified {got}")
    )
    out.append(
        _check(
            "z6/relative-subgroup",
            d is not None and d.H == ((0,), (3,)),
            f"H = {None if d is None else d.H}",
        )
    )
    prof = angle_profile(FrameSpec(g, S))
    pred = dds_angles(6, 3, 2, 2, 1)
    dev = max(abs(a - b) for a, b in zip(prof.angles, pred.angles))
    out.append(
        _check(
            "z6/angles-match-rule",
            prof.d == 2 and dev <= 1e-10,
            f"profile {prof.angles} vs rule {pred.angles}, dev {dev:.2e}",
        )
    )
    counted = dict(zip(prof.angles, prof.multiplicities))
    third = min(prof.angles)
    out.append(
        _check(
            "z6/counted-multiplicities",
            counted[third] == 3 and counted[max(prof.angles)] == 2,
            f"counted {counted}",
        )
    )
    derived = btf_multiplicities_from_angles(6, 3, *sorted(prof.angles))
    out.append(
        _check(
            "z6/multiplicity-identity",
            derived == tuple(prof.multiplicities),
            f"identity gives {derived}, counted {prof.multiplicities}",
        )
    )
    out.append(
        _check(
            "z6/stated-count-discrepancy-flagged",
            pred.multiplicity_conflict and pred.stated_multiplicities == (2, 3)
            and pred.derived_multiplicities == (3, 2),
            f"stated {pred.stated_multiplicities} vs derived {pred.derived_multiplicities} "
            "(the stated n/l count includes the identity character index)",
        )
    )
    elapsed = time.perf_counter() - t0
    out.append(_check("z6/runtime", elapsed < 0.1, f"{elapsed:.3f}s"))
    return out


def suite_z9_example() -> list[CheckResult]:
    """{0,1,3,4} in Z9: a two-level set whose frame has four angles."""
    t0 = time.perf_counter()
    g = parse_group("Z9")
    S = parse_subset(g, "0,1,3,4")
    cls = classify(g, S)
    out = []
    wit = next(
        (w for w in cls.bidifference_witnesses if w.lam == 2 and w.mu == 1), None
    )
    out.append(
        _check(
            "z9/bidifference",
            cls.proper_bidifference and wit is not None,
            f"witnesses {[(w.l, w.lam, w.mu) for w in cls.bidifference_witnesses]}",
        )
    )
    out.append(
        _check(
            "z9/witness-A",
            wit is not None and wit.A == ((0,), (1,), (3,), (6,), (8,)),
            f"A = {None if wit is None else wit.A}",
        )
    )
    # the witness cardinality satisfies the two-level counting identity
    # m(m-1) = lam(l-1) + mu(n-l), which pins l = 5 (printed elsewhere as 4)
    consistent = wit is not None and 4 * 3 == wit.lam * (wit.l - 1) + wit.mu * (9 - wit.l)
    out.append(
        _check(
            "z9/witness-size",
            consistent and wit.l == 5,
            f"l = {None if wit is None else wit.l} satisfies the counting identity "
            "(a printed value of 4 would not)",
        )
    )
    ang = classify_angularity(FrameSpec(g, S))
    out.append(
        _check(
            "z9/four-angular",
            ang.d == 4 and not ang.is_btf,
            f"{ang.d} angles: {tuple(round(a, 6) for a in ang.profile.angles)}",
        )
    )
    out.append(
        _check(
            "z9/not-divisible-not-partial",
            cls.divisible is None and cls.partial is None,
            "two-level set generating a non-two-angle frame",
        )
    )
    elapsed = time.perf_counter() - t0
    out.append(_check("z9/runtime", elapsed < 0.1, f"{elapsed:.3f}s"))
    return out


def suite_etf_difference(max_order: int = 10) -> list[CheckResult]:
    """Equiangularity <=> one-level difference structure, exhaustively."""
    t0 = time.perf_counter()
    from .groups import full_character_table
    import itertools

    checked = 0
    mismatches = []
    for n in range(2, max_order + 1):
        for g in abelian_groups_of_order(n):
            T = full_character_table(g)
            zero_idx = g.index(g.zero)
            els = g.elements()
            for m in range(2, n + 1):
                w = welch_bound(n, m)
                for subset in itertools.combinations(els, m):
                    cols = [g.index(x) for x in subset]
                    mags = np.abs(T[:, cols].sum(axis=1)) / m
                    mags = np.delete(mags, zero_idx)
                    is_etf = bool(np.max(np.abs(mags - w)) <= 1e-7)
                    dc = difference_counts(g, subset)
                    is_ds = len(dc.levels) == 1
                    checked += 1
                    if is_etf != is_ds:
                        mismatches.append((g.name, subset))
    elapsed = time.perf_counter() - t0
    return [
        _check(
            "etf-difference/equivalence",
            not mismatches,
            f"{checked} subsets over orders 2..{max_order}, {len(mismatches)} mismatches",
        ),
        _check("etf-difference/runtime", elapsed < 30.0, f"{elapsed:.3f}s"),
    ]


PALEY_BIANGULAR = (13, 17, 29, 37, 41)
PALEY_EQUIANGULAR = (7, 11, 19, 23)


def suite_paley() -> list[CheckResult]:
    """Quadratic residue sets: two-angle for p = 1 mod 4, one-angle for p = 3 mod 4."""
    t0 = time.perf_counter()
    out = []
    for p in PALEY_BIANGULAR:
        S, cls = paley_pds(p)
        want = (p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)
        got = (cls.n, cls.m, cls.partial.lam, cls.partial.mu) if cls.partial else None
        out.append(_check(f"paley/p{p}-pds-params", got == want, f"{got}"))
        prof = angle_profile(FrameSpec(GroupSpec((p,)), S))
        expect = sorted((1 / (math.sqrt(p) + 1), 1 / (math.sqrt(p) - 1)))
        dev = max(abs(a - b) for a, b in zip(prof.angles, expect))
        out.append(
            _check(
                f"paley/p{p}-angles",
                prof.d == 2 and dev <= 1e-9,
                f"angles {prof.angles}, dev {dev:.2e}",
            )
        )
    for p in PALEY_EQUIANGULAR:
        S, cls = paley_pds(p)
        lam = (p - 3) // 4
        out.append(
            _check(
                f"paley/p{p}-difference-set",
                cls.difference_set_lambda == lam,
                f"lambda = {cls.difference_set_lambda}",
            )
        )
        ang = classify_angularity(FrameSpec(GroupSpec((p,)), S))
        out.append(_check(f"paley/p{p}-etf", ang.is_etf, ang.label))
    elapsed = time.perf_counter() - t0
    out.append(_check("paley/runtime", elapsed < 5.0, f"{elapsed:.3f}s"))
    return out


def suite_gauss_sums(max_p: int = 97) -> list[CheckResult]:
    """Numeric quadratic sums against the four-case closed forms, all a, p <= max_p."""
    t0 = time.perf_counter()
    primes = [p for p in range(3, max_p + 1) if is_prime(p)]
    worst_full = 0.0
    worst_half = 0.0
    for p in primes:
        for a in range(1, p):
            worst_full = max(worst_full, abs(gauss_sum(a, p) - gauss_sum_closed_form(a, p)))
            worst_half = max(
                worst_half, abs(half_gauss_sum(a, p) - half_gauss_sum_closed_form(a, p))
            )
    elapsed = time.perf_counter() - t0
    return [
        _check(
            "gauss-sums/full",
            worst_full <= 1e-9,
            f"max deviation {worst_full:.2e} over p <= {max_p}",
        ),
        _check(
            "gauss-sums/half",
            worst_half <= 1e-9,
            f"max deviation {worst_half:.2e} over p <= {max_p}",
        ),
        _check("gauss-sums/runtime", elapsed < 5.0, f"{elapsed:.3f}s"),
    ]


QUARTIC_PRIMES = (13, 29, 37, 53, 61)


def suite_quartic() -> list[CheckResult]:
    """Fourth-power subsets of Z_p, p = 8q+5: structure, memberships, angles."""
    t0 = time.perf_counter()
    out = []
    for p in QUARTIC_PRIMES:
        q = (p - 5) // 8
        S, (lam, mu) = quartic_gaussian_ds(p)
        out.append(
            _check(
                f"quartic/p{p}-lambda-mu",
                lam + mu == q,
                f"(lam, mu) = ({lam}, {mu}), sum {lam + mu} = q",
            )
        )
        g = GroupSpec((p,))
        cls = classify(g, S, chain=False)
        out.append(
            _check(
                f"quartic/p{p}-gaussian",
                cls.gaussian is not None and (cls.gaussian.lam, cls.gaussian.mu) == (lam, mu),
                f"gaussian record {cls.gaussian}",
            )
        )
        cosets = quartic_coset_decomposition(p)
        out.append(
            _check(
                f"quartic/p{p}-memberships",
                (p - 1) in cosets[2] and (p - 2) in cosets[3],
                "-1 in 4R4 and -2 in 8R4",
            )
        )
        if lam != mu:
            pred = gaussian_angles(p, (p - 1) // 4, lam, mu)
            prof = angle_profile(FrameSpec(g, S))
            dev = max(abs(a - b) for a, b in zip(prof.angles, pred.angles))
            out.append(
                _check(
                    f"quartic/p{p}-angles",
                    prof.d == 2 and dev <= 1e-8,
                    f"dev {dev:.2e}",
                )
            )
            out.append(
                _check(
                    f"quartic/p{p}-multiplicities",
                    tuple(prof.multiplicities) == ((p - 1) // 2, (p - 1) // 2),
                    f"{prof.multiplicities}",
                )
            )
        else:
            ang = classify_angularity(FrameSpec(g, S))
            out.append(_check(f"quartic/p{p}-etf", ang.is_etf, ang.label))
    elapsed = time.perf_counter() - t0
    out.append(_check("quartic/runtime", elapsed < 10.0, f"{elapsed:.3f}s"))
    return out


def suite_quartic_special() -> list[CheckResult]:
    """The representable-prime special cases at p = 37 and p = 29."""
    out = []
    rep37 = quartic_special_cases(37)
    ds = next(
        (i for i in rep37.implications if i["class"] == "difference_set" and i["set"] == "R4"),
        None,
    )
    out.append(
        _check(
            "quartic-special/p37-difference-set",
            ds is not None and ds["holds"] and ds["params"] == [37, 9, 2],
            f"{ds}",
        )
    )
    rep29 = quartic_special_cases(29)
    alm = next((i for i in rep29.implications if i["class"] == "almost"), None)
    out.append(
        _check(
            "quartic-special/p29-almost",
            alm is not None and alm["holds"] and alm["params"] == [29, 7, 1, 14],
            f"{alm}",
        )
    )
    pred = quartic_family_angles(29, with_zero=False)
    S, _ = quartic_gaussian_ds(29)
    prof = angle_profile(FrameSpec(GroupSpec((29,)), S))
    expect = sorted(
        (math.sqrt(88 + 8 * math.sqrt(29)) / 28, math.sqrt(88 - 8 * math.sqrt(29)) / 28)
    )
    dev_closed = max(abs(a - b) for a, b in zip(pred.angles, expect))
    dev_frame = max(abs(a - b) for a, b in zip(prof.angles, expect))
    out.append(
        _check(
            "quartic-special/p29-angles",
            dev_closed <= 1e-12 and dev_frame <= 1e-8,
            f"closed-form dev {dev_closed:.2e}, frame dev {dev_frame:.2e}",
        )
    )
    return out


def _random_frame(rng: random.Random, max_order: int) -> FrameSpec:
    n = rng.randint(2, max_order)
    g = rng.choice(abelian_groups_of_order(n))
    m = rng.randint(1, n)
    subset = tuple(sorted(rng.sample(g.elements(), m)))
    return FrameSpec(g, subset)


def suite_modulation(
    group: str | None = None,
    subset: str | None = None,
    trials: int = 200,
    max_order: int = 32,
    seed: int = 718,
) -> list[CheckResult]:
    """Hilbert-Schmidt orthogonality, inversion, and the angle encoding identity."""
    t0 = time.perf_counter()
    out = []
    if group is not None:
        if not subset:
            raise DomainError("modulation check on a named group needs --set")
        g = parse_group(group)
        S = parse_subset(g, subset)
        rep = verify_modulation_identities(FrameSpec(g, S))
        for key, val in rep.as_dict().items():
            if key.endswith("_deviation"):
                out.append(_check(f"modulation/{group}-{key}", val <= rep.tolerance, f"{val:.2e}"))
        return out
    rng = random.Random(seed)
    worst = {"definitional": 0.0, "hs": 0.0, "inversion": 0.0, "encoding": 0.0}
    for _ in range(trials):
        f = _random_frame(rng, max_order)
        rep = verify_modulation_identities(f)
        worst["definitional"] = max(worst["definitional"], rep.definitional_deviation)
        worst["hs"] = max(worst["hs"], rep.hs_orthogonality_deviation)
        worst["inversion"] = max(worst["inversion"], rep.inversion_deviation)
        worst["encoding"] = max(worst["encoding"], rep.angle_encoding_deviation)
    elapsed = time.perf_counter() - t0
    for key, val in worst.items():
        out.append(
            _check(
                f"modulation/{key}",
                val <= 1e-8,
                f"max deviation {val:.2e} over {trials} random frames (n <= {max_order})",
            )
        )
    out.append(_check("modulation/runtime", elapsed < 120.0, f"{elapsed:.3f}s"))
    return out


def suite_tables() -> list[CheckResult]:
    """Every tabulated family row at its sample instantiations, 1e-10."""
    out = []
    for rep in run_all_table_checks():
        name = f"tables/{rep.table}-row{rep.row}-{rep.sample}"
        if rep.skipped:
            out.append(_check(name, False, f"skipped: {rep.skipped}"))
        else:
            out.append(_check(name, rep.passed, f"deviation {rep.deviation:.2e}"))
    return out


def suite_properties() -> list[CheckResult]:
    """Cross-cutting invariants on a sweep of small groups."""
    import itertools

    out = []
    t0 = time.perf_counter()

    # translation invariance of classification parameters
    bad_translate = 0
    checked_translate = 0
    for n in (6, 8, 9):
        for g in abelian_groups_of_order(n):
            els = g.elements()
            for subset in itertools.combinations(els, 3):
                base = classify(g, subset, chain=False)
                base_key = (
                    base.difference_set_lambda,
                    tuple(sorted((w.l, w.lam, w.mu) for w in base.bidifference_witnesses)),
                )
                for c in els[1:]:
                    moved = classify(g, tuple(sorted(translate(g, subset, c))), chain=False)
                    key = (
                        moved.difference_set_lambda,
                        tuple(sorted((w.l, w.lam, w.mu) for w in moved.bidifference_witnesses)),
                    )
                    checked_translate += 1
                    if key != base_key:
                        bad_translate += 1
    out.append(
        _check(
            "properties/translation-invariance",
            bad_translate == 0,
            f"{checked_translate} translated classifications compared",
        )
    )

    # equidistribution and the tight-sum identity for every frame in the sweep
    bad_equi = 0
    bad_tight = 0
    frames = 0
    for n in range(2, 9):
        for g in abelian_groups_of_order(n):
            els = g.elements()
            for m in range(1, n + 1):
                for subset in itertools.combinations(els, m):
                    f = FrameSpec(g, subset)
                    prof = angle_profile(f)
                    frames += 1
                    if abs(prof.tight_sum() - (n - m) / m) > 1e-8:
                        bad_tight += 1
                    V = f.vectors()
                    G = np.abs(V @ V.conj().T)
                    np.fill_diagonal(G, -1.0)
                    rows = np.sort(G, axis=1)
                    if np.max(rows.max(axis=0) - rows.min(axis=0)) > 1e-9:
                        bad_equi += 1
    out.append(
        _check(
            "properties/tight-sum-identity",
            bad_tight == 0,
            f"{frames} frames, {bad_tight} violations",
        )
    )
    out.append(
        _check(
            "properties/equidistribution",
            bad_equi == 0,
            f"{frames} frames, {bad_equi} violations",
        )
    )

    # every detected proper partial set is reversible
    bad_rev = 0
    found_pds = 0
    for n in (5, 8, 9, 13):
        for g in abelian_groups_of_order(n):
            els = g.elements()
            for m in (3, 4):
                for subset in itertools.combinations(els, m):
                    cls = classify(g, subset, chain=False)
                    if cls.partial is not None and cls.partial.proper:
                        found_pds += 1
                        if frozenset(reversal(g, subset)) != frozenset(subset):
                            bad_rev += 1
    out.append(
        _check(
            "properties/pds-reversibility",
            found_pds > 0 and bad_rev == 0,
            f"{found_pds} proper partial sets, {bad_rev} non-reversible",
        )
    )

    # zero-toggle parameter law, both directions, re-verified by classification
    toggles_ok = True
    detail = []
    for p in (13, 17):
        g = GroupSpec((p,))
        S, cls = paley_pds(p)
        plus, params_plus = pds_zero_toggle(g, S)
        expect_plus = (p, (p - 1) // 2 + 1, (p - 5) // 4 + 2, (p - 1) // 4)
        back, params_back = pds_zero_toggle(g, plus)
        expect_back = (p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)
        ok = (
            params_plus == expect_plus
            and params_back == expect_back
            and frozenset(back) == frozenset(S)
        )
        toggles_ok &= ok
        detail.append(f"p={p}: {params_plus} <-> {params_back}")
    out.append(_check("properties/pds-zero-toggle", toggles_ok, "; ".join(detail)))

    elapsed = time.perf_counter() - t0
    out.append(_check("properties/runtime", elapsed < 60.0, f"{elapsed:.3f}s"))
    return out


SUITES = {
    "exhaustion-order8": suite_exhaustion_order8,
    "z6-example": suite_z6_example,
    "z9-example": suite_z9_example,
    "etf-difference": suite_etf_difference,
    "paley": suite_paley,
    "gauss-sums": suite_gauss_sums,
    "quartic": suite_quartic,
    "quartic-special": suite_quartic_special,
    "modulation": suite_modulation,
    "tables": suite_tables,
    "properties": suite_properties,
}


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite in SUITES.values():
            results.extend(suite())
        return results
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](**kwargs)
