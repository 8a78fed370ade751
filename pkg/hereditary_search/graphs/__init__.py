"""Grafos imutáveis em linhas de bits, operações e formatos."""
