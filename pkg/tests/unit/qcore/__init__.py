"""Unit tests for qcore."""
