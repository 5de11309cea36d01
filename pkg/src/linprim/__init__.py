"""Finite linear groups: simple-group catalog, bounds, socles and exact constructions."""
__version__ = "0.1.0"
