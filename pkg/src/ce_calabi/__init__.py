"""
ce-calabi
Exact Z2 engine for Chekanov-Eliashberg algebras, their 2-copy bimodules and
the Calabi-Yau structure maps between them.
"""

__version__ = "0.1.0"
__author__ = "ce-calabi developers"
