"""Exact decision procedures: unit-fraction enumeration, Kochen-Specker
colouring search with certificates, and Groebner-basis ideal membership."""

__version__ = "0.1.0"
