import rdp.codec.lossy
from rdp.codec.lossless import LosslessStage
from rdp.codec.twostage import TwoStageCodec, DecodeError
from rdp.codec.factory import build_codec
from rdp.codec.metrics import CodecMetrics, rate_for, m_for_rate, epsilon_exact, lossy_branch_probability, \
    sigma_exact, evaluate, EXACT_CAP
from rdp.codec.lossy import LOSSY_METHODS
