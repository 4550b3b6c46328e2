from rdp.tradeoff.theorem import TradeoffPoint, RdpBreakdown, rd_term, perception_term, rdp_theorem
from rdp.tradeoff.example import rdp_paper_example
from rdp.tradeoff.discrepancy import TradeoffRow, Discrepancy, tradeoff_grid, discrepancy_report, \
    DISCREPANCY_TOLERANCE
