"""Generating functions for symmetrically constrained compositions."""
