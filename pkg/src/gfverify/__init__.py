"""Special functions and a verification harness for Jacobi-family expansions."""

__version__ = "0.1.0"
