"""Legs, optimal ears and ears compatible with earlier ears of the same layer."""
