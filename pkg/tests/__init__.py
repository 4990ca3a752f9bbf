"""Test package for bn-walls."""
