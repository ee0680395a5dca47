"""Graph families and cospectral pair constructions."""
