"""Tests for the large-parts identities."""

import pytest

from partition_meter.schemas.composition import SacParams
from partition_meter.services.identity import floor_div
from shared.models.enums import SummationDomain


class TestLargePartsSum:
    """Sum of the large-parts term."""

    @pytest.mark.parametrize(
        ("n", "m", "expected"), [(5, 1, 13), (5, 2, 6), (1, 1, 1), (7, 3, 8)]
    )
    def test_examples(self, identity, n, m, expected):
        assert identity.large_parts_sum(SacParams(n=n, m=m)) == expected

    def test_literal_domain_ignores_m(self, identity):
        params = SacParams(n=5, m=2)
        assert identity.large_parts_sum(params, SummationDomain.LITERAL) == 13

    def test_sfl_from_large_parts(self, identity, metrics):
        for n in range(1, 20):
            for m in range(1, n + 1):
                params = SacParams(n=n, m=m)
                assert identity.sfl_from_large_parts(params) == metrics.sfl_recurrence(params)


class TestEq1:
    """2 p(n) - 1 equals the large-parts sum."""

    def test_max_n_5(self, identity):
        report = identity.verify_eq1(5)
        assert report.all_pass
        assert (report.rows[-1].lhs, report.rows[-1].rhs) == (13, 13)

    def test_max_n_1(self, identity):
        report = identity.verify_eq1(1)
        assert [(r.lhs, r.rhs) for r in report.rows] == [(1, 1)]

    def test_max_n_10(self, identity):
        report = identity.verify_eq1(10)
        assert report.all_pass
        assert (report.rows[-1].n, report.rows[-1].lhs) == (10, 83)

    @pytest.mark.slow
    def test_max_n_60(self, identity):
        report = identity.verify_eq1(60, jobs=2)
        assert report.all_pass
        assert len(report.rows) == 60


class TestEq6:
    """General-m identity."""

    def test_rows(self, identity):
        rows = {(r.n, r.m): r for r in identity.verify_eq6(7).rows}
        assert (rows[5, 2].lhs, rows[5, 2].rhs) == (3, 3)
        assert (rows[5, 1].lhs, rows[5, 1].rhs) == (13, 13)
        assert (rows[7, 3].lhs, rows[7, 3].rhs) == (3, 3)

    def test_sweep_to_30(self, identity):
        report = identity.verify_eq6(30)
        assert report.all_pass
        assert len(report.rows) == 30 * 31 // 2
        assert report.note is not None and "sac(n, m)" in report.note

    def test_literal_reading_fails(self, identity):
        report = identity.verify_eq6(8, domain=SummationDomain.LITERAL)
        assert not report.all_pass
        rows = {(r.n, r.m): r for r in report.rows}
        assert (rows[5, 2].lhs, rows[5, 2].rhs, rows[5, 2].passed) == (3, 10, False)
        assert all(row.passed for row in report.rows if row.m == 1)
        assert report.name == "eq6-literal"

    def test_parallel_matches_serial(self, identity):
        assert identity.verify_eq6(15, jobs=3).rows == identity.verify_eq6(15).rows


class TestArithmetic:
    """Supporting integer identities."""

    def test_floor_div_rounds_down(self):
        assert floor_div(-5, 2) == -3
        assert floor_div(-14, 3) == -5
        assert floor_div(0, 4) == 0

    def test_floor_identity(self, identity):
        assert identity.verify_floor_identity(60).all_pass

    def test_consistency(self, identity):
        report = identity.verify_consistency(25)
        assert report.all_pass
