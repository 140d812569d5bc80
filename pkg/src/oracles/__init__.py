"""Exact, exponential-time reference computations for small graphs."""
