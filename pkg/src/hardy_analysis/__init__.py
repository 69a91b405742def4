"""Weak-value analyses: ensembles, pointers, Hardy scenario, state preparation."""
