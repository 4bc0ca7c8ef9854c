"""Tests for the counting service."""

import pytest

from partition_meter.core.config import Settings
from partition_meter.core.exceptions import CountOverflowError, MemoLimitExceededError
from partition_meter.repositories.memo import MemoTable, clamp_m, entries_up_to
from partition_meter.schemas.composition import SacParams
from partition_meter.services.compositions import iterate
from partition_meter.services.counting import CountingService, pentagonal_table

P_1000 = 24061467864032622473692149727991


class TestNac:
    """The nac recurrence."""

    @pytest.mark.parametrize(
        ("n", "m", "expected"),
        [(5, 1, 7), (5, 2, 2), (6, 2, 4), (1, 1, 1), (7, 3, 2)],
    )
    def test_examples(self, counting, n, m, expected):
        assert counting.nac(SacParams(n=n, m=m)) == expected

    @pytest.mark.parametrize(("n", "expected"), [(5, 7), (1, 1), (10, 42), (100, 190569292)])
    def test_partition_count(self, counting, n, expected):
        assert counting.partition_count(n) == expected

    def test_matches_iteration(self, counting):
        for n in range(1, 26):
            for m in range(1, n + 1):
                params = SacParams(n=n, m=m)
                assert counting.nac(params) == sum(1 for _ in iterate(params))

    def test_constant_tail(self, counting):
        for n in range(1, 40):
            for m in range(n // 2 + 1, n + 1):
                assert counting.nac(SacParams(n=n, m=m)) == 1

    def test_monotone_in_m(self, counting):
        for n in range(2, 60):
            values = [counting.nac(SacParams(n=n, m=m)) for m in range(1, n + 1)]
            assert all(a >= b for a, b in zip(values, values[1:], strict=False))

    def test_fill_is_incremental(self, counting):
        counting.fill(10)
        assert counting.filled_to == 10
        size = len(counting.nac_table)
        counting.fill(5)
        assert len(counting.nac_table) == size
        counting.fill(12)
        assert counting.filled_to == 12

    def test_large_n_is_exact(self, counting):
        assert counting.partition_count(1000) == P_1000


class TestPentagonalOracle:
    """Independent p(n)."""

    @pytest.mark.parametrize(("n", "expected"), [(0, 1), (5, 7), (10, 42), (1000, P_1000)])
    def test_examples(self, counting, n, expected):
        assert counting.pentagonal_oracle(n) == expected

    def test_agrees_with_recurrence_to_300(self, counting):
        oracle = pentagonal_table(300)
        for n in range(1, 301):
            assert counting.partition_count(n) == oracle[n]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            pentagonal_table(-1)

    def test_verify_oracle_report(self, counting):
        report = counting.verify_oracle(300)
        assert report.all_pass
        assert len(report.rows) == 300
        assert report.rows[9].lhs == report.rows[9].rhs == 42


class TestOverflow:
    """Fixed-width emulation."""

    def test_64_bits_overflow_is_detected(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        with pytest.raises(CountOverflowError):
            counting.partition_count(500)

    def test_64_bits_below_limit_is_exact(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        assert counting.partition_count(300) == pentagonal_table(300)[300]

    def test_64_bits_reaches_largest_fitting_count(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        expected = pentagonal_table(416)[416]
        assert expected < 1 << 64 <= pentagonal_table(417)[417]
        assert counting.partition_count(416) == expected
        with pytest.raises(CountOverflowError):
            counting.partition_count(417)

    def test_64_bits_suffix_length_checked_on_read(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        assert counting.partition_count(416) > 0
        with pytest.raises(CountOverflowError, match="sfl"):
            counting.sfl(SacParams(n=416, m=1))
        assert counting.sfl(SacParams(n=300, m=1)) == 2 * counting.partition_count(300) - 1

    def test_128_bits_reaches_1000(self):
        counting = CountingService(Settings(_env_file=None, count_bits=128))
        assert counting.partition_count(1000) == P_1000

    def test_oracle_overflow_is_detected(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        with pytest.raises(CountOverflowError):
            counting.pentagonal_oracle(500)

    def test_failed_fill_never_stores_wrapped_values(self):
        counting = CountingService(Settings(_env_file=None, count_bits=64))
        with pytest.raises(CountOverflowError):
            counting.partition_count(500)
        ceiling = 1 << 64
        assert all(value < ceiling for value in counting.nac_table._values.values())


class TestMemoTable:
    """Memo table repository."""

    def test_clamping(self):
        assert clamp_m(10, 3) == 3
        assert clamp_m(10, 6) == 6
        assert clamp_m(10, 9) == 6
        table = MemoTable("t")
        table.put(10, 8, 1)
        assert table.get(10, 6) == 1
        assert table.get(10, 10) == 1
        assert (10, 7) in table

    def test_write_once(self):
        table = MemoTable("t")
        table.put(4, 1, 5)
        table.put(4, 1, 5)
        with pytest.raises(RuntimeError):
            table.put(4, 1, 6)

    def test_size_is_quadratic(self, counting):
        counting.fill(40)
        assert len(counting.nac_table) == entries_up_to(40)
        assert entries_up_to(40) == sum(n // 2 + 1 for n in range(1, 41))

    def test_limit(self):
        counting = CountingService(Settings(_env_file=None, memo_limit=10))
        assert counting.nac(SacParams(n=4, m=1)) == 5
        with pytest.raises(MemoLimitExceededError):
            counting.nac(SacParams(n=50, m=1))

    def test_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("PARTITION_METER_MEMO_LIMIT", "10")
        counting = CountingService(Settings(_env_file=None))
        with pytest.raises(MemoLimitExceededError):
            counting.partition_count(50)
