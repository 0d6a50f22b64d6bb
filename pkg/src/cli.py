"""
Module: cli.py
-------------
Interface en ligne de commande.

Commandes:
    check      Verdict de linéarité et nombre de valeurs propres principales
    classify   Membre du catalogue isomorphe, ou "none"
    generate   Émet Hi, Gj(params) ou Ti(longueurs)
    enumerate  Graphes tricycliques connexes d'un ordre
    verify     Vérification du théorème jusqu'à un ordre

Codes de sortie: 0 succès, 1 entrée ou usage invalide, 2 contre-exemple,
échec de l'équivalence de Hagos ou autre anomalie relevée par verify.
Les omissions connues du catalogue sont signalées sans changer le code.

Fonctions:
    run: Exécute une ligne de commande et renvoie (code, stdout, stderr)
    main: Point d'entrée console

Version: 1.0
"""

import argparse
import io
import json
import logging
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from src.core.families import build_base, build_family, classify
from src.core.enumeration import enumerate_tricyclic, verify_theorem
from src.core.graph_io import FORMATS, read_graphs, to_graph6, write_graphs
from src.core.graph_core import is_tricyclic
from src.core.linearity import check_two_walk_linear
from src.core.spectral import main_eigen_report
from src.models.errors import ParameterError, TricyclicError
from src.models.family import FamilyId, FamilyKind
from src.models.graph import BaseType
from src.ui.console_ui import ConsoleUI
from src.utils.logger_config import get_logger, setup_logging
from src.utils.settings import DEFAULT_SETTINGS, STRATEGIES

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COUNTEREXAMPLE = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


class UsageError(Exception):
    """Option ou commande inconnue"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: erreur: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='Journalisation détaillée (DEBUG)')
    verbosity.add_argument('--quiet', action='store_true', help='Avertissements seulement')
    common.add_argument('--log-dir', type=Path, default=None,
                        help='Dossier du fichier de log horodaté (aucun fichier par défaut)')

    parser = _Parser(prog='tricyclic', description='Graphes tricycliques à deux valeurs propres principales')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    check = commands.add_parser('check', parents=[common], help='Verdict et valeurs propres principales')
    check.add_argument('input', nargs='?', help='Fichier de graphes (stdin par défaut)')
    check.add_argument('--format', choices=FORMATS, default='auto')
    check.add_argument('--float', action='store_true', help='Ajoute le compte flottant (Jacobi)')
    check.add_argument('--json', action='store_true')

    classify_cmd = commands.add_parser('classify', parents=[common], help='Membre du catalogue')
    classify_cmd.add_argument('input', nargs='?')
    classify_cmd.add_argument('--format', choices=FORMATS, default='auto')
    classify_cmd.add_argument('--json', action='store_true')

    generate = commands.add_parser('generate', parents=[common], help='Émet un graphe nommé')
    generate.add_argument('kind', help="H, G, T, ou un identifiant complet comme 'G2:1,0'")
    generate.add_argument('values', nargs='*', type=int, help='Indice puis paramètres')
    generate.add_argument('--format', choices=('graph6', 'edgelist'), default='graph6')

    enumerate_cmd = commands.add_parser('enumerate', parents=[common], help='Énumère un ordre')
    enumerate_cmd.add_argument('order', type=int)
    enumerate_cmd.add_argument('--strategy', choices=STRATEGIES, default=DEFAULT_SETTINGS.strategy)
    enumerate_cmd.add_argument('--threads', type=int, default=DEFAULT_SETTINGS.threads)
    enumerate_cmd.add_argument('--format', choices=('graph6', 'edgelist'), default='graph6')

    verify = commands.add_parser('verify', parents=[common], help='Vérifie le théorème')
    verify.add_argument('--max-order', type=int, default=DEFAULT_SETTINGS.max_order)
    verify.add_argument('--strategy', choices=STRATEGIES, default=DEFAULT_SETTINGS.strategy)
    verify.add_argument('--threads', type=int, default=DEFAULT_SETTINGS.threads)
    verify.add_argument('--json', action='store_true')
    verify.add_argument('--no-float', action='store_true', help='Saute la contre-vérification flottante')
    verify.add_argument('--allow-long', action='store_true',
                        help=f'Autorise les ordres au-delà de {DEFAULT_SETTINGS.long_run_order}')
    verify.add_argument('--dump-positives', type=Path, default=None,
                        help='Écrit les graphes positifs en graph6 dans ce fichier')
    return parser


def _read_input(args, stdin) -> str:
    if args.input:
        return Path(args.input).read_text(encoding='utf-8')
    if stdin is None:
        return ''
    data = stdin.read() if hasattr(stdin, 'read') else stdin
    return data.decode('utf-8') if isinstance(data, bytes) else data


def _command_check(args, stdin, out: List[str]) -> int:
    records = []
    for g in read_graphs(_read_input(args, stdin), args.format):
        verdict = check_two_walk_linear(g)
        report = main_eigen_report(g, with_float=args.float)
        code = to_graph6(g)
        if args.json:
            records.append({
                "graph6": code,
                "tricyclic": is_tricyclic(g),
                "verdict": verdict.to_dict(),
                "main_eigenvalues": report.to_dict(),
            })
        else:
            out.append(ConsoleUI.check_line(code, verdict, report))
    if args.json:
        out.append(json.dumps(records, indent=2))
    return EXIT_OK


def _command_classify(args, stdin, out: List[str]) -> int:
    records = []
    for g in read_graphs(_read_input(args, stdin), args.format):
        family = classify(g)
        code = to_graph6(g)
        if args.json:
            records.append({"graph6": code, "family": str(family) if family else None})
        else:
            out.append(ConsoleUI.classify_line(code, family))
    if args.json:
        out.append(json.dumps(records, indent=2))
    return EXIT_OK


def _command_generate(args, out: List[str]) -> int:
    kind = args.kind.upper()
    if kind == 'T':
        if not args.values:
            raise ParameterError("generate T attend un type 1..8 puis ses longueurs")
        try:
            base = BaseType(args.values[0])
        except ValueError as exc:
            raise ParameterError(f"type de base {args.values[0]} hors de 1..8") from exc
        g = build_base(base, args.values[1:])
    else:
        if kind in ('H', 'G'):
            if not args.values:
                raise ParameterError(f"generate {kind} attend un indice")
            family = FamilyId(FamilyKind(kind), args.values[0], tuple(args.values[1:]))
        else:
            family = FamilyId.parse(args.kind)
        g = build_family(family)
    out.append(write_graphs([g], args.format).rstrip('\n'))
    return EXIT_OK


def _command_enumerate(args, out: List[str]) -> int:
    graphs = enumerate_tricyclic(args.order, args.strategy, max(1, args.threads))
    text = write_graphs(graphs, args.format).rstrip('\n')
    if text:
        out.append(text)
    return EXIT_OK


def _command_verify(args, out: List[str], err) -> int:
    settings = DEFAULT_SETTINGS.with_overrides(max_order=args.max_order, strategy=args.strategy,
                                               threads=max(1, args.threads))
    if settings.max_order > settings.long_run_order and not args.allow_long:
        raise ParameterError(
            f"--max-order {settings.max_order} > {settings.long_run_order} exige --allow-long"
        )
    reports = verify_theorem(settings.max_order, settings.strategy, settings.threads,
                             with_float=not args.no_float, settings=settings)
    if args.json:
        out.append(json.dumps([report.to_dict() for report in reports], indent=2))
    else:
        out.append(ConsoleUI.report_table(reports))
    if args.dump_positives is not None:
        lines = [code for report in reports for code in report.positive_graph6]
        args.dump_positives.write_text(''.join(f"{code}\n" for code in lines), encoding='utf-8')

    omissions = [code for report in reports for code in report.known_omissions]
    if omissions:
        ConsoleUI.print_warning(f"{len(omissions)} positif(s) connu(s) hors des tables: "
                                f"{' '.join(omissions)}", err)
    if all(report.ok for report in reports):
        ConsoleUI.print_success(f"aucun contre-exemple jusqu'à l'ordre {args.max_order}", err)
        return EXIT_OK
    ConsoleUI.print_warning("anomalies détectées, voir le rapport", err)
    return EXIT_COUNTEREXAMPLE


def run(argv: Sequence[str], stdin=None) -> CommandResult:
    """
    Exécute une commande.

    :param argv: Arguments sans le nom du programme
    :param stdin: Flux, octets ou texte lus par check et classify
    :return: CommandResult(code de sortie, stdout, stderr)
    """
    err = io.StringIO()
    out: List[str] = []
    parser = _build_parser()
    try:
        help_buffer = io.StringIO()
        with redirect_stdout(help_buffer):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        err.write(f"{exc}\n")
        return CommandResult(EXIT_INPUT, '', err.getvalue())
    except SystemExit as exc:
        return CommandResult(EXIT_OK if not exc.code else EXIT_INPUT, help_buffer.getvalue(), err.getvalue())

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    setup_logging(level, args.log_dir, stream=err)

    try:
        if args.command == 'check':
            code = _command_check(args, stdin, out)
        elif args.command == 'classify':
            code = _command_classify(args, stdin, out)
        elif args.command == 'generate':
            code = _command_generate(args, out)
        elif args.command == 'enumerate':
            code = _command_enumerate(args, out)
        else:
            code = _command_verify(args, out, err)
    except (TricyclicError, OSError) as exc:
        logger.debug("échec de la commande", exc_info=True)
        ConsoleUI.print_error(exc, err)
        return CommandResult(EXIT_INPUT, '', err.getvalue())

    stdout = ''.join(f"{line}\n" for line in out)
    return CommandResult(code, stdout, err.getvalue())


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv, sys.stdin)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code
