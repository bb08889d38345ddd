"""Presentation files and the command-line interface."""
