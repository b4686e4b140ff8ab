"""Exact representation theory of the Jordanian deformation of sl(2).

Constructs finite-dimensional highest-weight representations of the
h-deformed sl(2) algebra from Verma-module recursion relations and singular
vectors, builds the deformed so(4) on tensor products of two copies, and
verifies the contracted Euclidean algebras e(2), e(3) and their q-analogue
together with the nonlinear maps onto the classical algebras -- all in exact
rational arithmetic.
"""

__version__ = "0.1.0"
