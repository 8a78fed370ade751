# -*- coding: utf-8 -*-

"""
Ponto de entrada da linha de comando.

Subcomandos: solve, classify, reduce, verify-reduction, gen, bound, props.
Cada comando devolve um payload JSON; `run` o embrulha num CommandResult
e `main` escreve o envelope em stdout. Logs vão para stderr.

Uso:
    python -m hereditary_search solve --pig co-bipartite --pi bipartite -k 6 k6.g6
    python -m hereditary_search -s SEARCH_WORKERS=4 solve --pig cograph --pi planar -k 5 g.g6
    python -m hereditary_search gen --class unit-disk -n 12 --radius 0.3 --seed 7
"""

import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from scrapy.exceptions import NotConfigured
from scrapy.settings import Settings

from ..config import get_settings, parse_overrides, setup_logging
from ..exceptions import HereditarySearchError, UsageError
from ..graphs.formats import encode_graph6, encode_points, read_graph, read_graphs
from ..oracles.exact import enumerate_all_graphs
from ..oracles.generators import GENERATOR_CLASSES, GeneratorSpec, generate
from ..properties.descriptors import get_descriptor, property_names
from ..ramsey import fpt_size_cutoff, ramsey_upper_bound, verify_ramsey_exhaustive
from ..reductions.transform import ReductionKind, build_reduction
from ..reductions.verify import verify_reduction_batch
from ..solver.dispatch import ProblemInstance, check_outcome, solve
from ..solver.pool import SearchPool
from ..solver.sgi import solve_via_sgi
from ..solver.table import classify_pair
from .output import OutputPipeline

logger = logging.getLogger(__name__)

Payload = Dict[str, Any]


@dataclass
class CommandResult:
    status: str
    payload: Optional[Payload]
    elapsed_ms: float
    command: Optional[str] = None
    error_kind: Optional[str] = None
    error_message: Optional[str] = None
    settings: Optional[Settings] = field(default=None, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.status == 'ok'

    @property
    def exit_code(self) -> int:
        if self.ok:
            return 0
        return 2 if self.error_kind == UsageError.kind else 1

    def to_envelope(self) -> Dict[str, Any]:
        envelope: Dict[str, Any] = {
            'status': self.status,
            'command': self.command,
            'payload': self.payload,
            'elapsed_ms': self.elapsed_ms,
        }
        if not self.ok:
            envelope['error'] = {'kind': self.error_kind, 'message': self.error_message}
        return envelope


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que levanta UsageError em vez de encerrar o processo."""

    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog='hereditary_search',
        description='Decide P(G, Π_G, Π, k) e executa as reduções por produto forte e junção.',
    )
    parser.add_argument('--format', dest='output_format', choices=('json', 'text'),
                        help='formato de saída (padrão: OUTPUT_FORMAT das configurações)')
    parser.add_argument('-s', '--set', dest='settings', action='append', default=[],
                        metavar='NOME=VALOR', help='sobrescreve uma configuração (repetível)')
    parser.add_argument('--log-level', choices=('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'))
    sub = parser.add_subparsers(dest='command', required=True, metavar='COMANDO')

    p = sub.add_parser('solve', help='decide P(G, Π_G, Π, k)')
    p.add_argument('--pig', required=True, help='classe de entrada Π_G')
    p.add_argument('--pi', required=True, help='propriedade alvo Π')
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--via-sgi', action='store_true', help='usa a rota por isomorfismo induzido')
    p.add_argument('--no-check-class', action='store_true', help='não testa G contra Π_G')
    p.add_argument('graphfile', help="graph6 ou lista de arestas ('-' para stdin)")

    p = sub.add_parser('classify', help='descritor de Π e, com --pig, a célula da tabela')
    p.add_argument('--pi', required=True)
    p.add_argument('--pig')

    p = sub.add_parser('reduce', help='aplica uma redução a partir de IS')
    p.add_argument('--kind', required=True, choices=[k.value for k in ReductionKind])
    p.add_argument('--pi', required=True)
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--out', help="grava G' em OUT (graph6) e o sidecar em OUT.json")
    p.add_argument('graphfile')

    p = sub.add_parser('verify-reduction', help='verifica a equivalência das instâncias')
    p.add_argument('--kind', required=True, choices=[k.value for k in ReductionKind])
    p.add_argument('--pi', required=True)
    p.add_argument('-k', dest='ks', type=int, action='append', required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--all-n', type=int, metavar='N', help='todos os grafos rotulados com N vértices')
    source.add_argument('graphfile', nargs='?', help='arquivo com um graph6 por linha')
    p.add_argument('--csv', help='grava uma linha CSV por instância')
    p.add_argument('--no-roundtrip', action='store_true', help='pula a ida e volta das testemunhas')

    p = sub.add_parser('gen', help='gera um grafo semeado de uma classe de entrada')
    p.add_argument('--class', dest='gen_class', required=True, choices=GENERATOR_CLASSES)
    p.add_argument('-n', type=int, required=True)
    scale = p.add_mutually_exclusive_group()
    scale.add_argument('--density', type=float)
    scale.add_argument('--radius', type=float)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--points-out', help='sidecar de pontos (unit-disk)')

    p = sub.add_parser('bound', help='cota binomial de R(r, s)')
    p.add_argument('r', type=int)
    p.add_argument('s', type=int)
    p.add_argument('--verify', type=int, metavar='N', help='verifica exaustivamente com n = N (N <= 6)')

    sub.add_parser('props', help='lista as propriedades embutidas')
    return parser


def _open_pool(settings: Settings) -> Optional[SearchPool]:
    try:
        return SearchPool.from_settings(settings)
    except NotConfigured as exc:
        logger.debug("[pool] desativado: %s", exc)
        return None


def cmd_solve(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    instance = ProblemInstance(read_graph(args.graphfile), get_descriptor(args.pig),
                               get_descriptor(args.pi), args.k)
    check_class = not args.no_check_class
    if args.via_sgi:
        outcome = solve_via_sgi(instance, check_class)
    else:
        pool = _open_pool(settings)
        try:
            outcome = solve(instance, check_class, pool)
        finally:
            if pool is not None:
                pool.close()
    check_outcome(instance, outcome)
    logger.info("[solve] %s via %s (%d testes)", outcome.answer.value, outcome.branch.value,
                outcome.membership_tests_performed)
    return outcome.to_payload()


def cmd_classify(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    pi = get_descriptor(args.pi)
    record = pi.to_record()
    if args.pig:
        pi_g = get_descriptor(args.pig)
        record['pi_g'] = pi_g.to_record()
        record['pair'] = classify_pair(pi_g, pi).to_record()
    return record


def cmd_bound(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    payload: Payload = {
        'r': args.r,
        's': args.s,
        'ramsey_upper_bound': ramsey_upper_bound(args.r, args.s),
        'fpt_size_cutoff': fpt_size_cutoff(args.r, args.s),
    }
    if args.verify is not None:
        verdict = verify_ramsey_exhaustive(args.r, args.s, args.verify)
        payload['verify'] = {
            'n': verdict.n,
            'all_forced': verdict.all_forced,
            'graphs_checked': verdict.graphs_checked,
            'counterexample': encode_graph6(verdict.counterexample) if verdict.counterexample else None,
        }
    return payload


def cmd_props(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    return {'properties': property_names()}


def cmd_reduce(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    reduction = build_reduction(ReductionKind(args.kind), read_graph(args.graphfile),
                                get_descriptor(args.pi), args.k)
    graph6 = encode_graph6(reduction.g_prime)
    sidecar = reduction.to_sidecar()
    if args.out:
        pipeline.write_reduction(args.out, graph6, sidecar)
    return {'graph6': graph6, 'sidecar': sidecar, 'out': args.out}


def cmd_verify_reduction(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    if args.all_n is not None:
        graphs = enumerate_all_graphs(args.all_n)
    else:
        graphs = read_graphs(args.graphfile)
    kind = ReductionKind(args.kind)
    records = list(verify_reduction_batch(graphs, get_descriptor(args.pi), args.ks, kind,
                                          roundtrip=not args.no_roundtrip))
    rows = [record.to_row() for record in records]
    if args.csv:
        pipeline.write_csv(args.csv, rows)
    failed = sum(1 for record in records if not record.passed)
    return {
        'kind': kind.value,
        'pi': args.pi,
        'ks': list(args.ks),
        'instances': len(records),
        'failed': failed,
        'all_passed': failed == 0,
        'csv': args.csv,
        'records': [dict(row, passed=record.passed) for row, record in zip(rows, records)],
    }


def cmd_gen(args: argparse.Namespace, settings: Settings, pipeline: OutputPipeline) -> Payload:
    density = args.density
    if density is None and args.gen_class != 'unit-disk':
        density = settings.getfloat('GENERATOR_DEFAULT_DENSITY', 0.5)
    spec = GeneratorSpec(args.gen_class, args.n, seed=args.seed, density=density, radius=args.radius)
    result = generate(spec, rejection_budget=settings.getint('GENERATOR_REJECTION_BUDGET', 100000))
    if args.points_out:
        if result.points is None:
            raise UsageError("--points-out só se aplica a --class unit-disk")
        pipeline.write_text(args.points_out, encode_points(result.points))
    payload = spec.to_record()
    payload.update({
        'graph6': encode_graph6(result.graph),
        'points': [list(p) for p in result.points] if result.points is not None else None,
        'points_out': args.points_out,
    })
    return payload


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings, OutputPipeline], Payload]] = {
    'solve': cmd_solve,
    'classify': cmd_classify,
    'reduce': cmd_reduce,
    'verify-reduction': cmd_verify_reduction,
    'gen': cmd_gen,
    'bound': cmd_bound,
    'props': cmd_props,
}


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def run(argv: Optional[List[str]] = None, configure_logs: bool = False) -> CommandResult:
    """
    Executa um subcomando e devolve o resultado, sem escrever em stdout.

    Args:
        argv: argumentos (sem o nome do programa)
        configure_logs: instala o handler de log em stderr

    Returns:
        CommandResult com status ok/error; erros carregam o `kind` estável
    """
    start = time.perf_counter()
    command: Optional[str] = None
    settings: Optional[Settings] = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        overrides: Dict[str, Any] = parse_overrides(args.settings)
        if args.log_level:
            overrides['LOG_LEVEL'] = args.log_level
        if args.output_format:
            overrides['OUTPUT_FORMAT'] = args.output_format
        settings = get_settings(overrides)
        if configure_logs:
            setup_logging(settings)
        pipeline = OutputPipeline.from_settings(settings)
        payload = COMMANDS[command](args, settings, pipeline)
        pipeline.check(command, payload)
        return CommandResult('ok', payload, _elapsed_ms(start), command, settings=settings)
    except HereditarySearchError as exc:
        logger.error("[cli] %s: %s", exc.kind, exc.message or exc)
        return CommandResult('error', None, _elapsed_ms(start), command,
                             exc.kind, exc.message or str(exc), settings=settings)


def main(argv: Optional[List[str]] = None) -> int:
    result = run(argv, configure_logs=True)
    pipeline = OutputPipeline.from_settings(result.settings) if result.settings else OutputPipeline()
    pipeline.emit(result.to_envelope(), sys.stdout)
    return result.exit_code
