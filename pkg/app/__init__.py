"""Quantum probabilities from the Fubini-Study geometry of complex projective space."""
