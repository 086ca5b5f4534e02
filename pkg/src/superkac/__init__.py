"""Kac-like modules for map superalgebras over truncated polynomial rings."""

__version__ = "0.1.0"
