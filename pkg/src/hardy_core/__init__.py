"""Core types, configuration, and linear algebra for hardy-weak-values."""
