# -*- coding: utf-8 -*-

"""
Pipeline de saída da CLI.

Serializa o CommandResult em stdout (JSON ou texto) e grava os arquivos
auxiliares pedidos pelos comandos: graph6 + sidecar de `reduce`, pontos
de `gen` e o CSV de `verify-reduction`. Diagnósticos vão para o logger,
nunca para stdout.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO

from scrapy.settings import Settings

from ..exceptions import InvalidArgument
from .schema import validate_envelope, validate_payload

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['graph6', 'k', 'alpha', 'target_answer', 'equivalent', 'roundtrip_ok']


class OutputPipeline:
    """
    Escritor do resultado de um comando.

    Formatos:
    - json: envelope {"status", "command", "payload", "elapsed_ms"} em uma linha
    - text: uma linha "chave: valor" por campo do payload
    """

    def __init__(self, output_format: str = 'json', sort_keys: bool = True, validate: bool = True,
                 csv_delimiter: str = ',') -> None:
        if output_format not in ('json', 'text'):
            raise InvalidArgument(f"formato de saída desconhecido: {output_format!r}")
        self.output_format = output_format
        self.sort_keys = sort_keys
        self.validate = validate
        self.csv_delimiter = csv_delimiter

    @classmethod
    def from_settings(cls, settings: Settings) -> 'OutputPipeline':
        return cls(
            output_format=settings.get('OUTPUT_FORMAT', 'json'),
            sort_keys=settings.getbool('JSON_SORT_KEYS', True),
            validate=settings.getbool('VALIDATE_PAYLOADS', True),
            csv_delimiter=settings.get('VERIFY_CSV_DELIMITER', ','),
        )

    def check(self, command: Optional[str], payload: Optional[Dict[str, Any]]) -> None:
        if self.validate and command is not None and payload is not None:
            validate_payload(command, payload)

    def dumps(self, obj: Any) -> str:
        return json.dumps(obj, sort_keys=self.sort_keys, ensure_ascii=False)

    def render(self, envelope: Dict[str, Any]) -> str:
        if self.validate:
            validate_envelope(envelope)
        if self.output_format == 'json':
            return self.dumps(envelope) + '\n'
        return self._render_text(envelope)

    def _render_text(self, envelope: Dict[str, Any]) -> str:
        lines: List[str] = [f"status: {envelope['status']}"]
        if envelope['status'] == 'error':
            error = envelope['error']
            lines.append(f"error: {error['kind']}: {error['message']}")
        else:
            payload = envelope.get('payload') or {}
            keys = sorted(payload) if self.sort_keys else list(payload)
            for key in keys:
                value = payload[key]
                shown = value if isinstance(value, str) else self.dumps(value)
                lines.append(f"{key}: {shown}")
        lines.append(f"elapsed_ms: {envelope['elapsed_ms']:.3f}")
        return '\n'.join(lines) + '\n'

    def emit(self, envelope: Dict[str, Any], stream: TextIO) -> None:
        stream.write(self.render(envelope))
        stream.flush()

    # ARQUIVOS AUXILIARES
    def write_text(self, path: str, text: str) -> None:
        try:
            Path(path).write_text(text, encoding='utf-8')
        except OSError as exc:
            raise InvalidArgument(f"não foi possível gravar {path}: {exc.strerror or exc}") from exc
        logger.info("[saida] gravado %s", path)

    def write_json(self, path: str, obj: Dict[str, Any]) -> None:
        self.write_text(path, self.dumps(obj) + '\n')

    def write_reduction(self, path: str, graph6: str, sidecar: Dict[str, Any]) -> None:
        """Grava o sidecar PATH.json e depois o graph6 em PATH; falha no graph6 remove o sidecar."""
        sidecar_path = path + '.json'
        self.write_json(sidecar_path, sidecar)
        try:
            self.write_text(path, graph6 + '\n')
        except InvalidArgument:
            Path(sidecar_path).unlink(missing_ok=True)
            raise

    def write_csv(self, path: str, rows: Iterable[Dict[str, Any]]) -> int:
        count = 0
        try:
            with open(path, 'w', newline='', encoding='utf-8') as handle:
                writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, delimiter=self.csv_delimiter,
                                        extrasaction='ignore')
                writer.writeheader()
                for row in rows:
                    writer.writerow(row)
                    count += 1
        except OSError as exc:
            raise InvalidArgument(f"não foi possível gravar {path}: {exc.strerror or exc}") from exc
        logger.info("[saida] CSV com %d linhas em %s", count, path)
        return count
