"""Test suite for the p2g toolkit."""
