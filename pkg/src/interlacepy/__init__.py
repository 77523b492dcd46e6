"""Exact interlace, Martin, Tutte-Martin and delta-matroid polynomials."""
