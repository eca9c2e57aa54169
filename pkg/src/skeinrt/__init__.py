"""Exact Kauffman bracket, Jones polynomial and quantum sl2 invariants."""

__version__ = "0.1.0"
