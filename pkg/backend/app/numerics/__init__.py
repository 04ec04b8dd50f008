# app/numerics/__init__.py
"""
Numerical core: arbitrary-precision arithmetic, iteration kernels, convergence
diagnostics and the problem suite.

Import from app.numerics.service for the high-level entry points.
"""
