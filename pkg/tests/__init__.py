"""Tests for the terrain k-gon toolkit."""
