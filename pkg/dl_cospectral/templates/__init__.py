"""Human-readable output templates for dl_cospectral."""
