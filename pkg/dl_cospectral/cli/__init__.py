"""Command-line interface for dl_cospectral."""
