"""Cospectral class discovery over enumerated or ingested graph corpora."""
