"""Quaternary coset codes in the group ring Z4[Z_n].

Constructions, metric analysis, Fourier analysis over GR(4,4), an algebraic
decoder for the pentacode and searches over unit-group subgroups.
"""

__version__ = "0.1.0"
