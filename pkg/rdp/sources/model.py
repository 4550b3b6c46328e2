"""
    Finite mixtures of memoryless binary (Bernoulli) sources
"""
from dataclasses import dataclass
import numpy as np

# Tolerance for the sum of the mixture weights
WEIGHT_TOLERANCE = 1e-12

PAPER_ALIAS = 'paper-mixed'


@dataclass(frozen=True)
class SourceModel:
    """
        Weighted mixture of Bernoulli components. components is a tuple of (weight, p) pairs, where p is
        the probability of the symbol 1. The block length n is passed per call and never stored.
    """
    components: tuple

    def __post_init__(self):
        components = tuple((float(w), float(p)) for w, p in self.components)
        if len(components) == 0:
            raise ValueError('Source model needs at least one component')
        for w, p in components:
            if not w > 0:
                raise ValueError('Component weights must be positive, got {}'.format(w))
            if not 0 <= p <= 1:
                raise ValueError('Component probabilities must lie in [0, 1], got {}'.format(p))
        total = sum(w for w, _ in components)
        if abs(total - 1) > WEIGHT_TOLERANCE:
            raise ValueError('Component weights must sum to 1, got {}'.format(total))
        object.__setattr__(self, 'components', components)

    @property
    def weights(self):
        return np.array([w for w, _ in self.components])

    @property
    def probabilities(self):
        return np.array([p for _, p in self.components])

    @property
    def is_single_component(self):
        return len(self.components) == 1

    def dominant_component(self):
        """
            Index of the component with the largest weight (ties go to the first one)
        """
        return int(np.argmax(self.weights))

    def to_string(self):
        """
            Inverse of parse
        """
        if self.is_single_component:
            return 'bernoulli:{!r}'.format(self.components[0][1])
        return 'mix:' + ','.join('{!r}*{!r}'.format(w, p) for w, p in self.components)

    @classmethod
    def bernoulli(cls, p):
        return cls(((1.0, p), ))

    @classmethod
    def paper(cls):
        """
            The canonical mixed source: Bernoulli(1/2) and Bernoulli(3/4) with equal weights
        """
        return cls(((0.5, 0.5), (0.5, 0.75)))

    @classmethod
    def parse(cls, text):
        """
            Parses 'bernoulli:p', 'mix:w1*p1,w2*p2,...' or the alias 'paper-mixed'
        :param text: Source specification string
        :return: SourceModel
        """
        text = text.strip()
        if text == PAPER_ALIAS:
            return cls.paper()
        kind, sep, body = text.partition(':')
        if not sep:
            raise ValueError('Malformed source {!r}'.format(text))
        try:
            if kind == 'bernoulli':
                return cls.bernoulli(float(body))
            elif kind == 'mix':
                components = []
                for item in body.split(','):
                    w, star, p = item.partition('*')
                    if not star:
                        raise ValueError('Malformed mixture component {!r}'.format(item))
                    components.append((float(w), float(p)))
                return cls(tuple(components))
        except ValueError as err:
            raise ValueError('Malformed source {!r}: {}'.format(text, err))
        raise ValueError('Unrecognized source kind {!r}'.format(kind))
