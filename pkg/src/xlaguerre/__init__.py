"""Exceptional Laguerre polynomials and rationally-extended radial oscillators.

Exact construction (rational arithmetic) of X_1, X_m and X_{m1,m2} Laguerre
families together with the SUSY partner potentials they belong to, plus a
floating-point layer for orthogonality and bound-state checks.
"""

__version__ = "0.1.0"
