"""Exact computations for central extensions of Poisson, hamiltonian and symplectic Lie algebras."""

__version__ = "0.1.0"
