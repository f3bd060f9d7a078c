"""Exact (q,t)-deformed path operators on symmetric functions."""

__version__ = "0.1.0"
