"""Pydantic schemas for command line output."""
