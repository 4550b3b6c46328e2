"""
    Tests for the grid evaluation of both evaluators and the discrepancy report
"""
from rdp.sources.model import SourceModel
from rdp.spectra import binary_entropy
from rdp.tradeoff import discrepancy_report, tradeoff_grid
from rdp.utils.grid import parse_grid
import math
import pytest

H_QUARTER = binary_entropy(0.25)


def _find(items, D, S):
    return [item for item in items if abs(item.D - D) < 1e-12 and abs(item.S - S) < 1e-12]


@pytest.mark.fast
def test_full_grid_report():
    d_grid, s_grid = parse_grid('0:0.5:0.01'), parse_grid('0:1:0.01')
    report = discrepancy_report(d_grid, s_grid)
    assert len(report) > 0
    assert _find(report, 0.1, 0.3)
    assert _find(report, 0.25, 0.75)
    assert not _find(report, 0.1, 0.5)
    differences = [item.difference for item in report]
    assert differences == sorted(differences, reverse=True)
    assert min(differences) > 1e-9


@pytest.mark.fast
def test_flagged_values():
    report = discrepancy_report([0.1, 0.25], [0.3, 0.5, 0.75])
    item = _find(report, 0.1, 0.3)[0]
    assert item.theorem_value == 1.0
    assert item.paper_value == pytest.approx(H_QUARTER, abs=1e-12)
    item = _find(report, 0.25, 0.75)[0]
    assert item.theorem_value == pytest.approx(H_QUARTER, abs=1e-12)
    assert item.paper_value == pytest.approx(1 - H_QUARTER, abs=1e-12)
    assert item.difference == pytest.approx(2 * H_QUARTER - 1, abs=1e-12)


@pytest.mark.fast
def test_grid_rows():
    rows = tradeoff_grid(SourceModel.paper(), parse_grid('0:0.5:0.05'), parse_grid('0:1:0.25'))
    assert len(rows) == 11 * 5
    assert (rows[0].D, rows[0].S) == (0.0, 0.0)
    assert (rows[1].D, rows[1].S) == (0.0, 0.25)
    row = _find(rows, 0.1, 0.5)
    assert len(row) == 1
    assert not row[0].flagged


@pytest.mark.fast
def test_distortion_beyond_printed_range():
    rows = tradeoff_grid(SourceModel.paper(), parse_grid('0:0.6:0.1'), [0.0, 0.5, 1.0])
    assert len(rows) == 7 * 3
    for row in rows:
        if row.D > 0.5:
            assert math.isnan(row.paper_value)
            assert not row.flagged
            assert row.theorem_value >= 0.0
        else:
            assert not math.isnan(row.paper_value)


@pytest.mark.fast
def test_non_canonical_source_is_never_flagged():
    rows = tradeoff_grid(SourceModel.bernoulli(0.3), [0.0, 0.1], [0.0, 0.5])
    assert all(math.isnan(row.paper_value) for row in rows)
    assert not any(row.flagged for row in rows)
