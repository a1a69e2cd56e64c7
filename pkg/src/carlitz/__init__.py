"""Exact relations among points of Carlitz tensor powers over F_{q^m}(x)."""

__version__ = "0.1.0"
