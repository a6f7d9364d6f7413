"""Legendre symbols, Gauss sums, Paley and quartic constructions."""

import math

import pytest

from framelab.arith import is_prime, residues
from framelab.errors import DomainError
from framelab.residues import (
    gauss_sum,
    gauss_sum_closed_form,
    half_gauss_sum,
    half_gauss_sum_closed_form,
    legendre,
    paley_pds,
    quartic_coset_decomposition,
    quartic_gaussian_ds,
    quartic_special_cases,
    quartic_symbol,
    residue_class,
)

PRIMES_TO_97 = [p for p in range(3, 98) if is_prime(p)]


def test_legendre_examples():
    assert legendre(2, 7) == 1  # 2 = 3^2 mod 7
    assert legendre(1, 31) == 1
    assert legendre(2, 13) == -1  # 13 = 5 mod 8
    with pytest.raises(DomainError):
        legendre(26, 13)
    with pytest.raises(DomainError):
        legendre(3, 9)


def test_legendre_multiplicativity():
    for p in PRIMES_TO_97:
        for a in range(1, p):
            for b in range(1, p, max(1, p // 7)):
                assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_two_is_square_iff_p_pm1_mod8():
    for p in PRIMES_TO_97:
        assert (legendre(2, p) == 1) == (p % 8 in (1, 7))


def test_residue_class_sizes():
    rc = residue_class(13, 2)
    assert rc.size == 6 and rc.elements == (1, 3, 4, 9, 10, 12)
    rc4 = residue_class(13, 4)
    assert rc4.elements == (1, 3, 9)
    for p in (13, 17, 29):
        assert residue_class(p, 2).size == (p - 1) // 2
        assert residue_class(p, 4).size == (p - 1) // 4
    with pytest.raises(DomainError):
        residue_class(7, 4)


def test_residues_closed_under_multiplication():
    for p, s in [(13, 2), (13, 4), (29, 4)]:
        rs = set(residues(p, s))
        for a in rs:
            for b in rs:
                assert (a * b) % p in rs


def test_quartic_symbol():
    assert quartic_symbol(3, 13) == 1  # 3 in {1,3,9}
    assert quartic_symbol(1, 13) == 1
    assert quartic_symbol(4, 13) == -1  # 4 is a square but not a fourth power
    with pytest.raises(DomainError):
        quartic_symbol(2, 13)  # 2 is a nonsquare mod 13
    with pytest.raises(DomainError):
        quartic_symbol(2, 7)  # p = 3 mod 4


def test_gauss_sum_examples():
    assert gauss_sum(1, 13) == pytest.approx(math.sqrt(13), abs=1e-9)
    assert gauss_sum(1, 7) == pytest.approx(1j * math.sqrt(7), abs=1e-9)
    assert gauss_sum(2, 13) == pytest.approx(-math.sqrt(13), abs=1e-9)


def test_gauss_sums_closed_form_all_primes():
    for p in PRIMES_TO_97:
        for a in range(1, p):
            assert abs(gauss_sum(a, p) - gauss_sum_closed_form(a, p)) <= 1e-9


def test_half_gauss_sum_four_cases():
    assert half_gauss_sum(1, 13) == pytest.approx((1 + math.sqrt(13)) / 2, abs=1e-9)
    assert half_gauss_sum(2, 13) == pytest.approx((1 - math.sqrt(13)) / 2, abs=1e-9)
    assert half_gauss_sum(1, 7) == pytest.approx((1 + math.sqrt(7) * 1j) / 2, abs=1e-9)
    assert half_gauss_sum(3, 7) == pytest.approx((1 - math.sqrt(7) * 1j) / 2, abs=1e-9)
    for p in (11, 17, 23, 29):
        for a in range(1, p):
            assert abs(half_gauss_sum(a, p) - half_gauss_sum_closed_form(a, p)) <= 1e-9


def test_paley_pds():
    S, cls = paley_pds(7)
    assert S == ((1,), (2,), (4,))
    assert cls.difference_set_lambda == 1
    _, cls13 = paley_pds(13)
    assert (cls13.partial.lam, cls13.partial.mu) == (2, 3)
    _, cls17 = paley_pds(17)
    assert (cls17.partial.lam, cls17.partial.mu) == (3, 4)


def test_quartic_coset_decomposition():
    cosets = quartic_coset_decomposition(13)
    assert cosets[0] == (1, 3, 9)
    assert cosets[1] == (2, 5, 6)
    assert cosets[2] == (4, 10, 12)
    assert cosets[3] == (7, 8, 11)
    for p in (13, 29, 37):
        cs = quartic_coset_decomposition(p)
        flat = [x for c in cs for x in c]
        assert sorted(flat) == list(range(1, p))
        assert all(len(c) == (p - 1) // 4 for c in cs)


def test_quartic_gaussian_ds_values():
    S, (lam, mu) = quartic_gaussian_ds(13)
    assert S == ((1,), (3,), (9,))
    assert (lam, mu) == (0, 1)
    S0, (lam0, mu0) = quartic_gaussian_ds(13, with_zero=True)
    assert S0 == ((0,), (1,), (3,), (9,))
    assert (lam0, mu0) == (1, 1)  # a (13, 4, 1) difference set
    _, (l29, m29) = quartic_gaussian_ds(29)
    assert l29 + m29 == 3
    with pytest.raises(DomainError):
        quartic_gaussian_ds(17)  # 17 = 1 mod 8


def test_quartic_membership_steps():
    for p in (13, 29, 37, 53, 61):
        cosets = quartic_coset_decomposition(p)
        assert (p - 1) in cosets[2]  # -1 in 4 R4
        assert (p - 2) in cosets[3]  # -2 in 8 R4


def test_difference_pair_counts_constant_on_cosets():
    # |{(x,y): x^4 - y^4 = a}| depends only on the coset of a
    for p in (13, 29, 37, 53, 61):
        counts = {}
        for x in range(1, p):
            for y in range(1, p):
                a = (pow(x, 4, p) - pow(y, 4, p)) % p
                if a:
                    counts[a] = counts.get(a, 0) + 1
        for coset in quartic_coset_decomposition(p):
            assert len({counts.get(a, 0) for a in coset}) == 1


def test_quartic_special_cases():
    rep = quartic_special_cases(37)
    assert rep.conditions["p=4a^2+1, a odd"]
    assert rep.verified
    assert any(
        i["class"] == "difference_set" and i["params"] == [37, 9, 2]
        for i in rep.implications
    )
    rep13 = quartic_special_cases(13)
    assert rep13.conditions["p=4a^2+9, a odd"]
    assert any(
        i["class"] == "difference_set" and i["params"] == [13, 4, 1]
        for i in rep13.implications
    )
    rep29 = quartic_special_cases(29)
    assert any(
        i["class"] == "almost" and i["params"] == [29, 7, 1, 14]
        for i in rep29.implications
    )
    assert rep29.verified


def test_gauss_sum_magnitude_is_sqrt_p():
    for p in (7, 13, 29, 53):
        for a in (1, 2, 3):
            assert abs(gauss_sum(a, p)) == pytest.approx(math.sqrt(p), abs=1e-9)
