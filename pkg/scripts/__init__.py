"""
widthkit Scripts Package
Command-line entry points
"""

__version__ = "1.0.0"
