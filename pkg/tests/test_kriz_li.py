"""Tests for the Kriz-Li set of auxiliary primes, its density and the twist family."""

import logging
from fractions import Fraction

import pytest

from h10_iwasawa.constants import KRIZ_LI_TABLE, MOD2_IMAGES
from h10_iwasawa.criteria import (
    is_catalogued,
    kriz_li_catalogue,
    kriz_li_conditions,
    kriz_li_density,
    kriz_li_density_formula,
    kriz_li_preconditions,
    kriz_li_S_test,
    kriz_li_twist_family,
    s_primes,
)
from h10_iwasawa.exceptions import InputValidationError, UnsupportedGaloisImageError
from h10_iwasawa.quad import make_field

K7 = make_field(-7)

S_BELOW_700 = [53, 149, 337, 373, 613]


@pytest.mark.unit
class TestSPrimes:
    """Membership in S for 37a1, K0 = Q(sqrt(-7)), p = 11."""

    def test_example_list(self, e37):
        assert s_primes(e37, K7, 11, 700) == S_BELOW_700

    @pytest.mark.parametrize("bound,expected", [(50, []), (53, []), (54, [53])])
    def test_bound_is_exclusive(self, e37, bound, expected):
        assert s_primes(e37, K7, 11, bound) == expected

    def test_conditions_of_member(self, e37):
        conditions = kriz_li_conditions(53, e37, K7, 11)
        assert conditions.member
        assert conditions.to_dict() == {
            "ell": 53,
            "splits": True,
            "squares": True,
            "one_mod_4": True,
            "frobenius_order_3": True,
            "member": True,
        }

    def test_conditions_evaluated_independently(self, e37):
        conditions = kriz_li_conditions(5, e37, K7, 11)
        assert not conditions.member
        assert conditions.one_mod_4
        assert not conditions.splits

    def test_fast_test_agrees_with_conditions(self, e37):
        for ell in range(3, 400, 2):
            if ell == 37 or any(ell % q == 0 for q in range(3, int(ell**0.5) + 1, 2)):
                continue
            assert kriz_li_S_test(ell, e37, K7, 11) == kriz_li_conditions(ell, e37, K7, 11).member

    def test_strict_square_condition_is_a_subset(self, e37):
        strict = s_primes(e37, K7, 11, 700, include_p=True)
        assert set(strict) <= set(S_BELOW_700)
        assert 53 in strict

    @pytest.mark.parametrize("ell", [2, 37])
    def test_primes_dividing_2N_rejected(self, e37, ell):
        with pytest.raises(InputValidationError):
            kriz_li_S_test(ell, e37, K7, 11)

    def test_preconditions_hold_for_example(self, e37):
        rows = kriz_li_preconditions(e37, K7, 11)
        assert all(row.passed for row in rows), [r for r in rows if not r.passed]

    def test_preconditions_fail_when_two_is_inert(self, e37):
        rows = {r.name: r for r in kriz_li_preconditions(e37, make_field(-3), 11)}
        assert rows["2 splits in Q(sqrt(-3))"].failed


@pytest.mark.unit
class TestDensity:
    """Natural density of S."""

    @pytest.mark.parametrize(
        "image,k,gaussian,expected",
        [
            ("S3", 1, False, Fraction(1, 12)),
            ("S3", 0, False, Fraction(1, 6)),
            ("Z/3", 0, False, Fraction(1, 6)),
            ("Z/3", 0, True, Fraction(1, 3)),
            ("Z/3", 2, False, Fraction(1, 24)),
        ],
    )
    def test_formula(self, image, k, gaussian, expected):
        assert kriz_li_density_formula(image, k, gaussian) == expected

    @pytest.mark.parametrize("image", ["Z/2", "trivial"])
    def test_unsupported_images(self, image):
        with pytest.raises(UnsupportedGaloisImageError):
            kriz_li_density_formula(image, 1)

    def test_negative_k(self):
        with pytest.raises(InputValidationError):
            kriz_li_density_formula("S3", -1)

    def test_unknown_image(self):
        with pytest.raises(InputValidationError) as exc_info:
            kriz_li_density_formula("A4", 1)
        assert exc_info.value.details["valid"] == list(MOD2_IMAGES)

    def test_every_known_image_is_handled(self):
        for image in MOD2_IMAGES:
            try:
                assert kriz_li_density_formula(image, 1) > 0
            except UnsupportedGaloisImageError as e:
                assert e.details["image"] in ("trivial", "Z/2")

    def test_curve_density(self, e37):
        assert kriz_li_density(e37, K7) == Fraction(1, 12)

    def test_attested_image_mismatch_warns(self, e37, caplog):
        mislabeled = e37.model_copy(update={"mod2_image": "Z/3"})
        with caplog.at_level(logging.WARNING):
            assert kriz_li_density(mislabeled, K7) == Fraction(1, 12)
        assert "using the computed one" in caplog.text


@pytest.mark.unit
class TestTwistFamily:
    """Twists by d_K0 times products of S-primes."""

    def test_first_member(self, e37):
        assert kriz_li_twist_family(e37, K7, 11, 1000) == [(53, -371)]

    def test_bound_is_exclusive(self, e37):
        assert kriz_li_twist_family(e37, K7, 11, 371) == []
        assert kriz_li_twist_family(e37, K7, 11, 372) == [(53, -371)]

    def test_single_primes_below_products(self, e37):
        family = kriz_li_twist_family(e37, K7, 11, 5000)
        assert family == [(ell, -7 * ell) for ell in S_BELOW_700]


@pytest.mark.unit
class TestCatalogue:
    """Published (curve, K0, p) triples."""

    def test_example_is_catalogued(self, e37):
        assert kriz_li_catalogue("37A1") == [(K7, 11)]
        assert is_catalogued(e37, K7, 11)

    def test_other_choices_are_not(self, e37, e58):
        assert not is_catalogued(e37, K7, 13)
        assert not is_catalogued(e37, make_field(-23), 11)
        assert not is_catalogued(e58, K7, 11)
        assert kriz_li_catalogue("58a1") == []

    def test_two_splits_in_every_catalogued_field(self):
        for _, d, p in KRIZ_LI_TABLE:
            assert d % 8 == 1
            assert make_field(d).disc == d
            assert p % 2 == 1

    def test_catalogued_bundled_curves_have_a_density(self, store):
        local = {record.label: record for record in store.local_records()}
        checked = 0
        for label, d, p in KRIZ_LI_TABLE:
            record = local.get(label)
            if record is None:
                continue
            checked += 1
            assert is_catalogued(record, make_field(d), p)
            assert kriz_li_density(record, make_field(d)) > 0
        assert checked >= 1
