# -*- coding: utf-8 -*-

"""
Montagem do objeto de configurações.

Usa o `Settings` do Scrapy para manter a mesma hierarquia de prioridades
de um projeto Scrapy: padrões < módulo do projeto < linha de comando.
"""

import logging
from typing import Dict, Iterable, Optional

from scrapy.settings import Settings
from scrapy.utils.log import configure_logging

from .exceptions import UsageError

SETTINGS_MODULE = 'hereditary_search.settings'


def parse_overrides(pairs: Optional[Iterable[str]]) -> Dict[str, str]:
    """
    Converte pares `NOME=VALOR` (opção -s da CLI) em dicionário.

    Examples:
        >>> parse_overrides(["LOG_LEVEL=INFO", "SEARCH_WORKERS=4"])
        {'LOG_LEVEL': 'INFO', 'SEARCH_WORKERS': '4'}
    """
    overrides: Dict[str, str] = {}
    for pair in pairs or ():
        name, sep, value = pair.partition('=')
        if not sep or not name.strip():
            raise UsageError(f"override inválido: {pair!r} (esperado NOME=VALOR)")
        overrides[name.strip()] = value.strip()
    return overrides


def get_settings(overrides: Optional[Dict[str, object]] = None) -> Settings:
    """Carrega o módulo de configurações e aplica overrides com prioridade 'cmdline'."""
    settings = Settings()
    settings.setmodule(SETTINGS_MODULE, priority='project')
    for name, value in (overrides or {}).items():
        settings.set(name, value, priority='cmdline')
    return settings


def setup_logging(settings: Settings) -> None:
    """Instala o handler raiz em stderr conforme LOG_LEVEL/LOG_FORMAT/LOG_FILE."""
    configure_logging(settings, install_root_handler=True)
    logging.getLogger(__name__).debug(
        "Logging configurado (level=%s, file=%s)",
        settings.get('LOG_LEVEL'), settings.get('LOG_FILE'),
    )
