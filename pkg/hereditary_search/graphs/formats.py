# -*- coding: utf-8 -*-

"""
Formatos de arquivo de grafos.

graph6 é o formato canônico de intercâmbio (bit-exato, compatível com
nauty/networkx). O formato de lista de arestas serve para autoria manual:
primeira linha "n m", seguida de m linhas "u v". Linhas vazias e
comentários iniciados por '#' são ignorados na lista de arestas.
"""

import re
import sys
from pathlib import Path
from typing import Iterable, List, Tuple

from ..exceptions import FormatError, InvalidArgument
from .graph import MAX_VERTICES, Graph, from_edge_list

GRAPH6_HEADER = '>>graph6<<'
_EDGE_LIST_HEADER = re.compile(r'^\d+\s+\d+$')


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return '~' + ''.join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return '~~' + ''.join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """
    Codifica o grafo em graph6.

    Os bits do triângulo superior são lidos coluna a coluna
    (j = 1..n-1, i = 0..j-1), agrupados em blocos de 6 bits big-endian
    com preenchimento de zeros e deslocados por 63.

    Examples:
        >>> encode_graph6(edgeless_graph(1))
        '@'
    """
    rows = g.rows
    out = [_encode_order(g.n)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((rows[i] >> j) & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = 0
                width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return ''.join(out)


def _decode_int(chars: str) -> int:
    value = 0
    for ch in chars:
        value = (value << 6) | (ord(ch) - 63)
    return value


def parse_graph6(text: str) -> Graph:
    """
    Decodifica uma linha graph6 (cabeçalho '>>graph6<<' opcional).

    Raises:
        FormatError: caractere fora de 63..126, cabeçalho incompleto,
            fluxo de bits truncado ou com caracteres sobrando.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise FormatError("graph6 vazio")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"caractere graph6 inválido {ch!r} na posição {pos}")

    if s[0] != '~':
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == '~':
        if len(s) < 8:
            raise FormatError("cabeçalho graph6 longo truncado")
        n, pos = _decode_int(s[2:8]), 8
    else:
        if len(s) < 4:
            raise FormatError("cabeçalho graph6 estendido truncado")
        n, pos = _decode_int(s[1:4]), 4
    if n >= MAX_VERTICES:
        raise FormatError(f"grafo com {n} vértices excede o limite suportado")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = s[pos:]
    if len(data) < nchars:
        raise FormatError(f"fluxo de bits truncado: {len(data)} de {nchars} caracteres")
    if len(data) > nchars:
        raise FormatError(f"caracteres excedentes no graph6: {len(data) - nchars}")

    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(data[t // 6]) - 63
            if (chunk >> (5 - t % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph(n, tuple(rows))


def encode_edge_list(g: Graph) -> str:
    """Lista de arestas: "n m" e depois uma aresta "u v" por linha."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return '\n'.join(lines) + '\n'


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_edge_list(text: str) -> Graph:
    """
    Decodifica o formato de lista de arestas.

    Examples:
        >>> parse_edge_list("3 2\\n0 1\\n1 2\\n").edge_count
        2
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError("lista de arestas vazia")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"cabeçalho esperado 'n m', recebido {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError(f"cabeçalho não numérico: {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"cabeçalho declara {m} arestas, arquivo contém {len(body)}")
    edges: List[Tuple[int, int]] = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"linha de aresta inválida: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"aresta não numérica: {line!r}")
    return from_edge_list(n, edges)


def sniff_format(text: str) -> str:
    """'edgelist' se a primeira linha útil é "n m", senão 'graph6'."""
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        return 'edgelist' if _EDGE_LIST_HEADER.match(line) else 'graph6'
    raise FormatError("entrada vazia")


def parse_graph_text(text: str) -> Graph:
    """Decodifica graph6 ou lista de arestas, detectando pelo conteúdo."""
    if sniff_format(text) == 'edgelist':
        return parse_edge_list(text)
    first = next(line.strip() for line in text.splitlines() if line.strip())
    return parse_graph6(first)


def parse_graph_collection(text: str) -> List[Graph]:
    """Vários grafos: um graph6 por linha, ou uma única lista de arestas."""
    if sniff_format(text) == 'edgelist':
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in _content_lines(text)]


def _read_text(path: str) -> str:
    try:
        if path == '-':
            return sys.stdin.read()
        file_path = Path(path)
        if not file_path.is_file():
            raise InvalidArgument(f"arquivo de grafo não encontrado: {path}")
        return file_path.read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: conteúdo não é texto UTF-8 ({exc.reason} no byte {exc.start})") from exc
    except OSError as exc:
        raise InvalidArgument(f"não foi possível ler {path}: {exc.strerror or exc}") from exc


def read_graph(path: str) -> Graph:
    """Lê um grafo de um arquivo, ou de stdin quando path é '-'."""
    return parse_graph_text(_read_text(path))


def read_graphs(path: str) -> List[Graph]:
    return parse_graph_collection(_read_text(path))


def encode_points(points: Iterable[Tuple[int, int]]) -> str:
    """Sidecar de pontos do gerador unit-disk: uma linha "x y" por vértice."""
    return ''.join(f"{x} {y}\n" for x, y in points)
