"""Unit tests for stateprep."""
