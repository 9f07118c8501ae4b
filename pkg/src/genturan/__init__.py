"""Generalized Turan numbers: constructions, exact counting and oracles."""

__version__ = "0.1.0"
