# app/__init__.py
"""
OctaSolve
Derivative-free eighth-order root finding in arbitrary precision
"""

__version__ = "1.0.0"
