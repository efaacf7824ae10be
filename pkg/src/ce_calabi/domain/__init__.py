"""
Domain layer - algebra, presentations, errors and report models.
"""
