"""
    Rate-distortion-perception function R(D, S) of the canonical mixed Bernoulli source, compared against
    the printed piecewise closed form, and the asymptotic spectral CDF it is built from
"""

import rdp
from rdp.utils.grid import inclusive_grid


# Distortion and perception grids:
d_grid = inclusive_grid(0, 0.5, 0.05)
s_grid = [0, 0.25, 0.5, 0.75, 1]

model = rdp.sources.SourceModel.paper()

steps = rdp.spectra.asymptotic_spectral_cdf(model)
print('Asymptotic spectral CDF: thresholds {}, levels {}'.format(steps.thresholds, steps.levels))

for row in rdp.tradeoff.tradeoff_grid(model, d_grid, s_grid):
    print('D={:.2f} S={:.2f}: R={:.6f} (rd {:.6f}, perception {:.6f}), closed form {:.6f}{}'
          .format(row.D, row.S, row.theorem_value, row.rd_term, row.perception_term, row.paper_value,
                  ' *' if row.flagged else ''))

report = rdp.tradeoff.discrepancy_report(d_grid, s_grid)
print('{} grid points differ from the closed form'.format(len(report)))
