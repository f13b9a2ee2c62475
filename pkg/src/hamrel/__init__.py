"""Exact reliability polynomials of hamiltonian graphs."""
