"""
Readers for the data files the command line consumes.
"""
