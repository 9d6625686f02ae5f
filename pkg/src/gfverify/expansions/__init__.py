"""Generating functions, expansion coefficients and the identity registry."""
