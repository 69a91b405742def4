"""Command-line front end for hardy-weak-values."""

__version__ = "0.1.0"
