from rdp.codec.lossy.base import LossyStageBase, MAX_CODEBOOK
from rdp.codec.lossy.explicit import ExplicitCodebook
from rdp.codec.lossy.random import RandomCodebook
from rdp.codec.lossy.greedy import GreedyCoverCodebook
from rdp.codec.lossy.typequant import TypeQuantizeCodebook
from rdp.codec.lossy.factory import get_lossy_stage, LOSSY_METHODS
