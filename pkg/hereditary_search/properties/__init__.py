"""Propriedades hereditárias: reconhecedores e descritores."""
