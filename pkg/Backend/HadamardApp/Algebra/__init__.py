"""Exact and floating-point algebra behind the Hadamard-inverse toolkit (no Django imports)."""
