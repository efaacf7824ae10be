"""
CLI tools for ce-calabi.
"""

from .commands import CLICommands

__all__ = ["CLICommands"]
