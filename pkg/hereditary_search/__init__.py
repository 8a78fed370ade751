# -*- coding: utf-8 -*-

"""Ferramenta de busca de subgrafos induzidos hereditários por cortes de Ramsey."""

__version__ = "0.1.0"
