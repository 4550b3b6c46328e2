from setuptools import setup, find_packages

setup(name='py-rdp',
      version='0.1.0',
      description='Rate-distortion-perception tradeoff for general binary sources: closed-form evaluation of '
                  'R(D, S) via the information spectrum, exact finite-n spectral computations, the two-stage '
                  'fixed-length code with exact and Monte Carlo evaluation, and an exhaustive oracle for the '
                  'finite-n (distortion, perception) frontier.',
      install_requires=['numpy>=1.17', 'scipy>=1.4', 'tqdm>=4.0', 'pytest>=3.7.1'],
      python_requires='>=3.8',
      packages=find_packages(where='.', exclude=['tests', 'testutils']),
      entry_points={'console_scripts': ['rdp=rdp.cli.main:main']})
