"""
Distance Laplacian cospectrality toolkit (dl_cospectral) package.

Computes distance Laplacian spectra exactly, discovers and verifies
cospectral graph pairs, builds the known cospectral constructions and checks
the coefficient results for distance Laplacian characteristic polynomials.
"""

__version__ = "0.1.0"
