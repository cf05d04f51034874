from .fuzz import fuzz, random_lattice
