# -*- coding: utf-8 -*-

"""
Configurações do projeto hereditary_search.

Este arquivo concentra todos os parâmetros ajustáveis da ferramenta:
paralelismo da busca exaustiva, orçamento dos geradores por rejeição,
formato de saída da CLI e configuração de logs. É carregado como módulo
de projeto por `hereditary_search.config.get_settings`, e qualquer valor
pode ser sobrescrito na linha de comando com `-s NOME=VALOR`.
"""

import os
from pathlib import Path

# Carregamento automático de variáveis de ambiente do arquivo .env
try:
    from dotenv import load_dotenv
    # Procura o arquivo .env na raiz do projeto
    env_path = Path(__file__).parent.parent / '.env'
    if env_path.exists():
        load_dotenv(env_path)
except ImportError:
    pass

# Informações básicas do projeto
PROJECT_NAME = 'hereditary_search'

# === BUSCA EXAUSTIVA ===

# Número de processos usados para particionar a enumeração de k-subconjuntos.
# 1 mantém a busca sequencial (o pool levanta NotConfigured).
SEARCH_WORKERS = int(os.getenv('HEREDITARY_SEARCH_WORKERS', '1'))

# Abaixo deste número de subconjuntos C(n, k) a busca nunca é distribuída:
# o custo de serializar o grafo supera o ganho.
SEARCH_PARALLEL_MIN_SUBSETS = int(os.getenv('HEREDITARY_SEARCH_PARALLEL_MIN_SUBSETS', '50000'))

# Número de "páginas" (blocos por menor vértice) enviadas a cada worker por vez
SEARCH_CHUNKSIZE = 1

# === GERADORES ===

# Tentativas máximas dos geradores por rejeição (c4-free, k14-free, triangle-free pequeno)
GENERATOR_REJECTION_BUDGET = int(os.getenv('HEREDITARY_REJECTION_BUDGET', '100000'))

# Densidade padrão quando --density não é informado
GENERATOR_DEFAULT_DENSITY = 0.5

# === SAÍDA DA CLI ===

# json (padrão) ou text
OUTPUT_FORMAT = os.getenv('HEREDITARY_OUTPUT_FORMAT', 'json')

# Chaves ordenadas garantem payload byte-idêntico entre execuções
JSON_SORT_KEYS = True

# Validação do payload contra o schema embarcado antes de escrever
VALIDATE_PAYLOADS = True

# Delimitador do CSV emitido por verify-reduction
VERIFY_CSV_DELIMITER = ','

# === CONFIGURAÇÃO DE LOG ===

# Logs vão sempre para stderr; stdout é reservado ao payload JSON
LOG_ENABLED = True
LOG_LEVEL = os.getenv('HEREDITARY_LOG_LEVEL', 'WARNING')
LOG_FORMAT = '%(asctime)s [%(name)s] %(levelname)s: %(message)s'
LOG_DATEFORMAT = '%Y-%m-%d %H:%M:%S'
LOG_FILE = os.getenv('HEREDITARY_LOG_FILE') or None
LOG_STDOUT = False
