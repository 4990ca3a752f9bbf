"""Brill-Noether and wall-crossing numerology for rank-2 bundles.

Exact integer computations on Hirzebruch surfaces F_e and the projective plane:
Euler characteristics, moduli dimensions, Brill-Noether numbers, walls in the
ample cone, wall-crossing reports and a slope-stability oracle for extension
bundles, plus the instanton numerology on P^3.
"""

__version__ = "0.4.0"
__all__ = ["__version__"]
