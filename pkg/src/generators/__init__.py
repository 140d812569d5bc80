"""Example families, named fixtures and seeded random corpora."""
