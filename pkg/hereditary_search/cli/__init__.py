"""Linha de comando: um subcomando por processo, payload JSON em stdout."""
