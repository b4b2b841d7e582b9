"""Fuss-Catalan combinatorics, bundled Temperley-Lieb diagram algebras and
their boundary versions."""

__version__ = "0.1.0"
