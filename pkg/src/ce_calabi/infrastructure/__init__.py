"""
Infrastructure layer - parsing, configuration, logging and shipped fixtures.
"""
