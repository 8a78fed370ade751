"""Reduções a partir de conjunto independente (produto forte e junção)."""
