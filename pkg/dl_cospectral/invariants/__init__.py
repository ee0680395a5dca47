"""Graph parameters compared across cospectral graphs."""
