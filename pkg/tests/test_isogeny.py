"""Tests for the 3-isogeny density, local Selmer ratios, the t-invariant and scans."""

from fractions import Fraction

import pytest

from h10_iwasawa.criteria import (
    INFINITY,
    AmbiguousSelmerRatio,
    IsogenyTwist,
    SelmerRatio,
    global_candidates,
    isogeny3_density,
    isogeny3_preconditions,
    local_ratios,
    negative_squarefree_range,
    ord3,
    scan,
    selmer_ratio_local,
    t0prime_membership,
    t_invariant,
    twist_selmer_report,
)
from h10_iwasawa.exceptions import (
    HypothesisError,
    InputValidationError,
    MissingIsogenyError,
    NonSemistableError,
    UnresolvedSelmerRatioError,
)

FIRST_TWENTY_D = [
    -1, -2, -3, -5, -6, -7, -10, -11, -13, -14,
    -15, -19, -21, -22, -23, -26, -29, -30, -31, -33,
]


@pytest.mark.unit
class TestIsogenyDensity:
    """Lower density of twists with H10-gen."""

    @pytest.mark.parametrize(
        "N,expected",
        [(209, Fraction(209, 1440)), (57, Fraction(19, 240)), (58, Fraction(29, 540))],
    )
    def test_semistable_conductors(self, N, expected):
        assert isogeny3_density(N) == expected

    def test_decimal(self):
        assert round(float(isogeny3_density(209)), 6) == 0.145139

    def test_not_semistable(self):
        with pytest.raises(NonSemistableError):
            isogeny3_density(1216)

    def test_nonpositive_conductor(self):
        with pytest.raises(InputValidationError):
            isogeny3_density(0)

    def test_needs_isogeny(self):
        with pytest.raises(HypothesisError):
            isogeny3_density(209, has3isogeny=False)

    def test_preconditions_report_non_semistable(self, e1216):
        rows = {r.name: r for r in isogeny3_preconditions(e1216, 5)}
        assert rows["E semistable"].failed
        assert rows["rational 3-isogeny"].passed
        assert rows["rank 1"].passed
        assert rows["p = 5 > 3"].passed


@pytest.mark.unit
class TestLocalRatios:
    """c_v(phi_d) on twists of 1216o3."""

    def test_places(self, e1216):
        phi = IsogenyTwist.from_record(e1216, -2)
        assert phi.places() == [2, 3, 19, INFINITY]

    def test_infinite_place(self, e1216):
        assert selmer_ratio_local(IsogenyTwist.from_record(e1216, 1), INFINITY) == SelmerRatio(
            INFINITY, Fraction(1, 3)
        )
        assert selmer_ratio_local(IsogenyTwist.from_record(e1216, -2), INFINITY) == SelmerRatio(
            INFINITY, Fraction(1)
        )

    def test_three_place_ambiguous_unless_ingested(self, e1216):
        phi = IsogenyTwist.from_record(e1216, -2)
        assert isinstance(selmer_ratio_local(phi, 3), AmbiguousSelmerRatio)
        assert selmer_ratio_local(phi, 3, Fraction(3)).value == 3
        with pytest.raises(InputValidationError):
            selmer_ratio_local(phi, 3, Fraction(9))

    def test_not_a_place(self, e1216):
        with pytest.raises(InputValidationError):
            selmer_ratio_local(IsogenyTwist.from_record(e1216, -2), "sqrt")

    def test_global_candidates(self, e1216):
        ratios = local_ratios(IsogenyTwist.from_record(e1216, -2))
        assert global_candidates(ratios) == [Fraction(1), Fraction(3)]

    def test_record_without_isogeny(self, e58):
        with pytest.raises(MissingIsogenyError):
            IsogenyTwist.from_record(e58, -1)

    def test_twist_must_be_squarefree(self, e1216):
        with pytest.raises(InputValidationError):
            IsogenyTwist.from_record(e1216, -8)

    def test_ord3(self):
        assert ord3(Fraction(9, 2)) == 2
        assert ord3(Fraction(1, 3)) == -1
        assert ord3(Fraction(5)) == 0


@pytest.mark.unit
class TestTInvariant:
    """Resolution of t(phi_d) by Selmer parity."""

    def test_unambiguous(self):
        t = t_invariant([SelmerRatio(2, Fraction(3)), SelmerRatio(INFINITY, Fraction(1, 3))])
        assert (t.t, t.parity_used) == (0, False)

    @pytest.mark.parametrize("parity,expected", [(0, 0), (1, 1), (2, 0)])
    def test_parity_selects_candidate(self, e1216, parity, expected):
        ratios = local_ratios(IsogenyTwist.from_record(e1216, -2))
        t = t_invariant(ratios, parity)
        assert t.t == expected
        assert t.m == expected
        assert t.parity_used

    def test_unresolved_without_parity(self, e1216):
        with pytest.raises(UnresolvedSelmerRatioError):
            t_invariant(local_ratios(IsogenyTwist.from_record(e1216, -2)))

    def test_several_ambiguous_places(self):
        ratios = [
            AmbiguousSelmerRatio(3, (Fraction(1), Fraction(3))),
            AmbiguousSelmerRatio(5, (Fraction(1), Fraction(3))),
        ]
        assert global_candidates(ratios) == [Fraction(1), Fraction(3), Fraction(9)]
        assert t_invariant(ratios, 1).t == 1
        with pytest.raises(UnresolvedSelmerRatioError):
            t_invariant(ratios, 0)

    def test_t0prime_membership(self, e1216):
        phi = IsogenyTwist.from_record(e1216, -2)
        assert t0prime_membership(-2, phi, parity=0)
        assert not t0prime_membership(-2, phi, parity=1)

    def test_t0prime_needs_d_one_mod_three(self, e1216):
        phi = IsogenyTwist.from_record(e1216, -1)
        assert not t0prime_membership(-1, phi, parity=0)

    def test_t0prime_d_mismatch(self, e1216):
        with pytest.raises(InputValidationError):
            t0prime_membership(-5, IsogenyTwist.from_record(e1216, -2), parity=0)


@pytest.mark.unit
class TestSelmerReport:
    """The full p = 3 chain."""

    def test_resolved_by_parity(self, e1216):
        report = twist_selmer_report(e1216, -2, parity=0)
        assert report.minimal_model == [0, -1, 0, 3, -1]
        assert report.conductor == 1216
        assert report.a3 == 2
        assert report.good_ordinary_at_3
        assert report.three_splits
        assert report.global_candidates == ["1", "3"]
        assert (report.t, report.in_T0, report.in_T0prime) == (0, True, True)
        assert report.parity_used

    def test_odd_parity(self, e1216):
        report = twist_selmer_report(e1216, -2, parity=1)
        assert report.t == 1
        assert report.in_T0 is False

    def test_unresolved_reports_note(self, e1216):
        report = twist_selmer_report(e1216, -2)
        assert report.t is None
        assert report.note
        assert report.global_ratio is None

    def test_twist_record_parity(self, store, e1216):
        twist = store.get("304f3")
        report = twist_selmer_report(e1216, -2, parity=twist.sel3_dim)
        assert report.t == 0


@pytest.mark.unit
class TestScan:
    """Per-d rows in input order."""

    def test_negative_squarefree_range(self):
        assert negative_squarefree_range(-10, -1) == [-1, -2, -3, -5, -6, -7, -10]

    def test_range_must_be_negative(self):
        with pytest.raises(InputValidationError):
            negative_squarefree_range(-10, 3)

    def test_without_store_rows_are_unknown(self, e58):
        report = scan(e58, 17, FIRST_TWENTY_D, jobs=4)
        assert [row.d for row in report.rows] == FIRST_TWENTY_D
        assert {row.status for row in report.rows} == {"unknown"}
        assert report.satisfied_fraction == 0
        assert report.blocked_fraction == 1
        assert report.t0_lower_bound is None

    def test_store_finds_twist(self, store, e58):
        report = scan(e58, 17, [-1, -2], store=store)
        first = report.rows[0]
        assert (first.status, first.twist_label, first.lambda_cyc_K) == ("satisfied", "464f1", 1)
        assert report.rows[1].status == "unknown"
        assert report.summary()["satisfied_fraction"] == "1/2"

    def test_error_row(self, e58):
        report = scan(e58, 17, [-1, -4])
        assert report.rows[1].status == "error"
        assert report.rows[1].error
        assert report.rows[0].status == "unknown"

    def test_jobs_validated(self, e58):
        with pytest.raises(InputValidationError):
            scan(e58, 17, [-1], jobs=0)

    def test_isogeny_mode(self, store, e1216):
        report = scan(e1216, 5, [-2], store=store, isogeny_mode=True)
        assert report.rows[0].t == 0
        assert report.t0_lower_bound == Fraction(1, 2)
        assert "t" in report.to_dataframe().columns

    def test_dataframe_columns(self, e58):
        frame = scan(e58, 17, [-1, -2]).to_dataframe()
        assert list(frame.columns) == [
            "d", "status", "twist_label", "lambda_cyc_K", "failed", "unknown",
        ]
        assert len(frame) == 2
