"""
Test package for ce-calabi.
"""
