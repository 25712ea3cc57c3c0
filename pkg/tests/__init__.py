"""Tests for the thicksat package."""
