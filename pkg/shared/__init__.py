"""
Shared Package

File formats shared by the CLI, the fixtures and the tests.
"""

__version__ = "1.0.0"
