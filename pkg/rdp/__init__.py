__version__ = '0.1.0'

import rdp.utils
import rdp.sources
import rdp.spectra
import rdp.tradeoff
import rdp.codec
import rdp.oracle
