"""Unit tests for hardy."""
