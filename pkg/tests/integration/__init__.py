"""
Integration tests for ce-calabi.
"""
