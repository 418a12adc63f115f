"""
quasigrow - local growth of 1D quasiperiodic (Fibonacci) coverings.

Grows Fibonacci coverings with adjustable string decorations, checks the
grown words against three independent oracles and enumerates the deceptions
of conventional fixed-decoration window rules.
"""

__version__ = "0.1.0"
