"""Exact Euler-characteristic invariants of graphs of groups with finite edge groups."""
__version__ = "0.1.0"
