"""
Special forms test module.

Unit tests for the exact constructions, symmetry censuses and spectral checks.
"""
