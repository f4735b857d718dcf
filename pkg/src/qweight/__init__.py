"""Exact higher-order Weierstrass weights for superelliptic families."""
