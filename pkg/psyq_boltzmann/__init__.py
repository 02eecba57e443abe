"""Psyquandle colorings and Boltzmann-enhanced invariants of singular links and pseudoknots."""

__version__ = "1.0.0"
