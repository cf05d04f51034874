"""Rank two toric lattice ideals, their Groebner fans and monomial Hilbert scheme points."""
