"""Oráculos exatos independentes e geradores de classes de entrada."""
