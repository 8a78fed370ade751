# -*- coding: utf-8 -*-

"""
Pool de processos para a busca exaustiva de k-subconjuntos.

Componente opcional no estilo de middleware: `from_settings` levanta
NotConfigured quando SEARCH_WORKERS <= 1 e o chamador segue pelo caminho
sequencial. O espaço de busca é dividido em páginas, uma por menor vértice
do subconjunto; as páginas voltam na ordem original, o que preserva a
testemunha lexicograficamente menor.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Dict, Iterable, Iterator, Optional, Tuple

from scrapy.exceptions import NotConfigured
from scrapy.settings import Settings

PageResult = Tuple[Optional[int], int]


class SearchPool:
    """
    Distribui páginas de busca entre processos.

    Funcionalidades:
    - Limiar mínimo de subconjuntos para valer a pena distribuir
    - Resultados na ordem das páginas, com parada na primeira testemunha
    - Estatísticas simples de uso para os logs da CLI
    """

    def __init__(self, settings: Settings):
        self.workers = settings.getint('SEARCH_WORKERS', 1)
        self.min_subsets = settings.getint('SEARCH_PARALLEL_MIN_SUBSETS', 50000)
        self.chunksize = max(1, settings.getint('SEARCH_CHUNKSIZE', 1))
        self._executor: Optional[ProcessPoolExecutor] = None
        self.stats: Dict[str, int] = {'searches': 0, 'pages_dispatched': 0, 'fan_outs': 0}
        self.logger = logging.getLogger(__name__)

    @classmethod
    def from_settings(cls, settings: Settings) -> 'SearchPool':
        """Factory: levanta NotConfigured se o paralelismo está desligado."""
        if settings.getint('SEARCH_WORKERS', 1) <= 1:
            raise NotConfigured('SEARCH_WORKERS <= 1: busca sequencial')
        pool = cls(settings)
        pool.logger.info(
            "[pool] busca paralela ativada (workers=%d, min_subsets=%d)",
            pool.workers, pool.min_subsets,
        )
        return pool

    def should_fan_out(self, subset_count: int) -> bool:
        return subset_count >= self.min_subsets

    def _ensure_executor(self) -> ProcessPoolExecutor:
        if self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self.workers)
        return self._executor

    def map_pages(self, page_fn: Callable[..., PageResult], pages: Iterable[int], *args: Any) -> Iterator[PageResult]:
        """Executa `page_fn(*args, page)` para cada página, devolvendo em ordem."""
        pages = list(pages)
        self.stats['searches'] += 1
        self.stats['fan_outs'] += 1
        self.stats['pages_dispatched'] += len(pages)
        executor = self._ensure_executor()
        self.logger.debug("[pool] distribuindo %d páginas", len(pages))
        return executor.map(partial(page_fn, *args), pages, chunksize=self.chunksize)

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None
            self.logger.info("[pool] encerrado (%s)", self.stats)

    def __enter__(self) -> 'SearchPool':
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
