"""Unit test package for dl_cospectral."""
