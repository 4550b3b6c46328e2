"""
    Closed form evaluation of the rate-distortion-perception function R(D, S) of a mixture of Bernoulli
    sources: the maximum of the rate-distortion term and the perception term.
"""
from dataclasses import dataclass
from rdp.spectra.entropy import binary_entropy
from rdp.spectra.spectrum import asymptotic_spectral_cdf


@dataclass(frozen=True)
class TradeoffPoint:
    """
        A (rate, distortion, perception) triple. D is per-symbol Hamming distortion, S a bound on the
        variational distance between reconstruction and source distributions.
    """
    R: float
    D: float
    S: float

    def __post_init__(self):
        if self.R < 0:
            raise ValueError('Rate must be non-negative, got {}'.format(self.R))
        if self.D < 0:
            raise ValueError('Distortion must be non-negative, got {}'.format(self.D))
        if not 0 <= self.S <= 1:
            raise ValueError('Perception budget must lie in [0, 1], got {}'.format(self.S))


@dataclass(frozen=True)
class RdpBreakdown:
    """
        R(D, S) together with the two terms it is the maximum of. rd_component is the index of the
        mixture component attaining the rate-distortion term, perception_level the level of the
        asymptotic spectral CDF at the perception term.
    """
    rd_term: float
    perception_term: float
    value: float
    rd_component: int
    perception_level: float

    @property
    def binding(self):
        """
            Which term determines the value ('rd', 'perception' or 'both')
        """
        if self.rd_term == self.perception_term:
            return 'both'
        return 'rd' if self.rd_term > self.perception_term else 'perception'


def _check_distortion(D):
    if not D >= 0:
        raise ValueError('Distortion must be non-negative, got {}'.format(D))


def _check_perception(S):
    if not 0 <= S <= 1:
        raise ValueError('Perception budget must lie in [0, 1], got {}'.format(S))


def _rd_components(model, D):
    h_d = binary_entropy(min(D, 0.5))
    return [max(0.0, binary_entropy(p) - h_d) for _, p in model.components]


def rd_term(model, D):
    """
        Rate-distortion function of the mixture under Hamming distortion: the maximum over the components
        of (h(p_j) - h(min(D, 1/2)))^+. Zero for D >= 1/2.
    :param model: SourceModel
    :param D: Per-symbol distortion >= 0
    :return: bits/symbol
    """
    _check_distortion(D)
    return max(_rd_components(model, D))


def perception_term(model, S):
    """
        inf{R >= 0 | F(R) <= S} on the asymptotic spectral CDF F of the model, with F taking the new level
        at each threshold. Zero for S >= 1.
    :param model: SourceModel
    :param S: Variational distance budget in [0, 1]
    :return: bits/symbol
    """
    _check_perception(S)
    if S >= 1:
        return 0.0
    return asymptotic_spectral_cdf(model).first_rate_at_most(S)


def rdp_theorem(model, D, S):
    """
        R(D, S) = max(rd_term(D), perception_term(S))
    :param model: SourceModel
    :param D: Per-symbol distortion >= 0
    :param S: Variational distance budget in [0, 1]
    :return: RdpBreakdown
    """
    _check_distortion(D)
    _check_perception(S)
    rd_values = _rd_components(model, D)
    rd = max(rd_values)
    perception = perception_term(model, S)
    level = asymptotic_spectral_cdf(model)(perception)
    return RdpBreakdown(rd_term=rd, perception_term=perception, value=max(rd, perception),
                        rd_component=rd_values.index(rd), perception_level=level)
