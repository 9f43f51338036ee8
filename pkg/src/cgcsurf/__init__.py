"""Numerical constructions for constant-Gaussian-curvature surfaces in
hyperbolic 3-space: Gauss-equation solves, extended-frame integration,
associated families, Gauss-map projections, and residual-based verification."""

__version__ = "0.1.0"
