"""
    Nonincreasing piecewise constant functions of the rate, used for asymptotic spectral CDFs
"""
from bisect import bisect_right
from dataclasses import dataclass


@dataclass(frozen=True)
class StepFunction:
    """
        F(R) = levels[i] for thresholds[i-1] <= R < thresholds[i]. A threshold t carries the new (lower)
        level at R = t, matching half open intervals of the form 'h(1/4) <= R < 1'.
    """
    thresholds: tuple
    levels: tuple

    def __post_init__(self):
        thresholds = tuple(float(t) for t in self.thresholds)
        levels = tuple(float(v) for v in self.levels)
        if len(levels) != len(thresholds) + 1:
            raise ValueError('A step function needs exactly one more level than thresholds')
        if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
            raise ValueError('Thresholds must be strictly increasing: {}'.format(thresholds))
        if any(b >= a for a, b in zip(levels, levels[1:])):
            raise ValueError('Levels must be strictly decreasing: {}'.format(levels))
        if levels[0] > 1 or levels[-1] < 0:
            raise ValueError('Levels must lie in [0, 1]: {}'.format(levels))
        object.__setattr__(self, 'thresholds', thresholds)
        object.__setattr__(self, 'levels', levels)

    def __call__(self, R):
        return self.levels[bisect_right(self.thresholds, R)]

    def first_rate_at_most(self, S, lower=0.0):
        """
            inf{R >= lower | F(R) <= S}. Exists for any S >= levels[-1].
        """
        if S < self.levels[-1]:
            raise ValueError('Level {} is never reached, lowest level is {}'.format(S, self.levels[-1]))
        if self(lower) <= S:
            return lower
        for threshold, level in zip(self.thresholds, self.levels[1:]):
            if level <= S and threshold >= lower:
                return threshold
        raise AssertionError('Unreachable: last level is <= S')
