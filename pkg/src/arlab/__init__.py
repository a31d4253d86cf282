"""Exact experiments around gcd(f^n - 1, g^m - 1) and its generalisations."""

__version__ = "0.1.0"
