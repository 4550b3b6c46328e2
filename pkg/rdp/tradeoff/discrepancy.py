"""
    Grid evaluation of both R(D, S) evaluators and the report of the points where they disagree
"""
from dataclasses import dataclass
import logging
import math
from rdp.sources.model import SourceModel
from rdp.tradeoff.theorem import rdp_theorem
from rdp.tradeoff.example import rdp_paper_example, MAX_DISTORTION

logger = logging.getLogger(__name__)

# Points whose values differ by more than this are flagged
DISCREPANCY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TradeoffRow:
    """
        One grid point: both terms of the theorem, its value, the printed example value (nan if the model
        is not the canonical source or D > 1/2) and whether the two differ
    """
    D: float
    S: float
    rd_term: float
    perception_term: float
    theorem_value: float
    paper_value: float

    @property
    def difference(self):
        if math.isnan(self.paper_value):
            return 0.0
        return abs(self.theorem_value - self.paper_value)

    @property
    def flagged(self):
        return self.difference > DISCREPANCY_TOLERANCE


@dataclass(frozen=True)
class Discrepancy:
    D: float
    S: float
    theorem_value: float
    paper_value: float
    difference: float


def tradeoff_grid(model, d_grid, s_grid):
    """
        Evaluates the theorem (and, for the canonical source, the printed example) on every grid point,
        D major and S minor
    :param model: SourceModel
    :param d_grid: Iterable of distortions
    :param s_grid: Iterable of perception budgets
    :return: list of TradeoffRow
    """
    canonical = model == SourceModel.paper()
    rows = []
    for D in d_grid:
        for S in s_grid:
            D, S = float(D), float(S)
            breakdown = rdp_theorem(model, D, S)
            # The printed formula only covers D <= 1/2
            paper = rdp_paper_example(D, S) if canonical and D <= MAX_DISTORTION else math.nan
            rows.append(TradeoffRow(D=D, S=S, rd_term=breakdown.rd_term,
                                    perception_term=breakdown.perception_term,
                                    theorem_value=breakdown.value, paper_value=paper))
    return rows


def discrepancy_report(d_grid, s_grid):
    """
        All grid points where Theorem evaluation and printed example for the canonical source differ by
        more than DISCREPANCY_TOLERANCE, sorted by difference (descending, grid order on ties). An empty
        list is a legal outcome.
    :param d_grid: Iterable of distortions in [0, 1/2]
    :param s_grid: Iterable of perception budgets in [0, 1]
    :return: list of Discrepancy
    """
    rows = tradeoff_grid(SourceModel.paper(), d_grid, s_grid)
    flagged = [Discrepancy(D=row.D, S=row.S, theorem_value=row.theorem_value, paper_value=row.paper_value,
                           difference=row.difference) for row in rows if row.flagged]
    logger.info('%d of %d grid points differ', len(flagged), len(rows))
    return sorted(flagged, key=lambda item: -item.difference)
