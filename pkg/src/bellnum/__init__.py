"""Exact and asymptotic computation of Bell numbers and their relatives:
the two Edo-period procedures, a brute-force set-partition oracle, the
saddle-point approximations, and local-limit-theorem reports."""

__version__ = "0.1.0"
