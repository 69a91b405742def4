"""Unit tests for weakval."""
