"""Exact computation of spectra, orders of reducibility and decompositions
of rational functions in several variables over Q."""

__version__ = "0.1.0"
