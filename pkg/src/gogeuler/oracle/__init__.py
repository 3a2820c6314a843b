"""Brute-force finite-group oracles."""
