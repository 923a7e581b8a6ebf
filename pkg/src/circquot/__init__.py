"""Exact Hilbert-series tools for symplectic circle quotients and finite
unitary quotients of C^2, with an auditor that certifies when the two cannot
agree."""

__version__ = "0.1.0"
