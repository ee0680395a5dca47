"""Transmissions, distance Laplacians, exact characteristic polynomials and spectra."""
