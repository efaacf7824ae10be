"""
Services layer - disc counts, bimodules, cyclic operations, homology and verification.
"""
