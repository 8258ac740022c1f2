"""Witness characters lying in two principal blocks with degree prime to both primes."""

__version__ = "0.1.0"
