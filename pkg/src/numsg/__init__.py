"""Tangent cones, quadraticity and the Koszul property for numerical semigroups."""

__version__ = "0.1.0"
