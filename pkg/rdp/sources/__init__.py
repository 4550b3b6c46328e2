import rdp.sources.block
from rdp.sources.model import SourceModel, PAPER_ALIAS
from rdp.sources.types import TypeClassTable, block_log_prob, block_log_probs, build_type_table, top_mass, \
    MASS_TOLERANCE
from rdp.sources.sampling import sample_block, sample_blocks, sample_ones_counts
