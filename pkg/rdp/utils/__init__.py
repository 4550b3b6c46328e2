import rdp.utils.grid
import rdp.utils.logmath
import rdp.utils.random
from rdp.utils.errors import ResourceLimitError
from rdp.utils.grid import inclusive_grid, parse_grid
from rdp.utils.random import get_rng, chunk_sizes
from rdp.utils.logmath import log2_sum, log2_comb, exact_binomials, log2_bernoulli_atom, log2_int, \
    below_log2_int, LN2
