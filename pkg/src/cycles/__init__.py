"""Cycle parameters of a graph: per-edge shortest cycles (eta) and isometric cycles (zeta)."""
