"""
Unit tests for ce-calabi.
"""
