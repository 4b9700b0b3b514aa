"""Exact homology of group diagrams over finite categories.

Finite categories are given by full composition tables, groups by
multiplication tables, and every homological invariant is computed over
arbitrary-precision integers (Smith normal form) or as a finite group
presentation with a homomorphism-counting fingerprint.
"""

__version__ = "0.1.0"
