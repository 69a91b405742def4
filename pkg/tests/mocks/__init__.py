"""Reusable test factories for hardy-weak-values."""
