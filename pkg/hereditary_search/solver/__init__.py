"""Procedimento de decisão P(G, Pi_G, Pi, k) e motores de busca."""
