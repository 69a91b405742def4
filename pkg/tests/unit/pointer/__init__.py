"""Unit tests for pointer."""
