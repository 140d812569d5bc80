"""Hypothesis detection and bound checks for the orientation and rainbow theorems."""
