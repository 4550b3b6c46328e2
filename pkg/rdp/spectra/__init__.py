from rdp.spectra.entropy import binary_entropy, binary_entropy_inv
from rdp.spectra.step import StepFunction
from rdp.spectra.spectrum import ExceedanceCurve, spectral_cdf_exact, exceedance_curve, asymptotic_spectral_cdf, \
    sample_self_information
from rdp.spectra.plimsup import plimsup_estimate
