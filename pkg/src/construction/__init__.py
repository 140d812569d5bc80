"""Layered ear constructions: strong orientations and rainbow colorings."""
