"""Exact Ehrhart, spectrum and hard Lefschetz computations for simplicial lattice polytopes."""
