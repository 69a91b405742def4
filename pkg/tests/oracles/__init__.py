"""Independent reference implementations used to check the library."""
