"""Configuration and error types shared by every dl_cospectral module."""
