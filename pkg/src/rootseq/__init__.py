"""Positive-root sequence combinatorics over AR quivers and commutation classes."""

__version__ = "0.1.0"
