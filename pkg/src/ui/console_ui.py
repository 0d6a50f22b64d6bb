"""
Module: console_ui.py
--------------------
Rendu console des résultats.

Les données (verdicts, tableaux de vérification) sont rendues en texte
brut pour que stdout reste identique d'une exécution à l'autre; les
messages d'état (erreurs, avertissements, succès) sont colorés et
destinés à stderr.

Classes:
    ConsoleUI: Méthodes statiques de rendu

Version: 1.0
"""

from typing import Iterable, List, Optional, TextIO

import colorama
from colorama import Fore, Style

from src.models.family import FamilyId
from src.models.report import EnumerationReport, MainEigenReport
from src.models.verdict import LinearityVerdict

colorama.init()


class ConsoleUI:
    """Rendu texte et messages d'état colorés"""

    TABLE_COLUMNS = (
        "n", "total", "positifs", "classés", "omis", "contre-ex.", "hagos", "flottant", "audit",
    )

    @staticmethod
    def check_line(graph6: str, verdict: LinearityVerdict, report: MainEigenReport) -> str:
        """<graph6>\\t<verdict>\\tmain=<k>[\\tfloat=<k>]"""
        line = f"{graph6}\t{verdict}\tmain={report.exact_count}"
        if report.float_count is not None:
            line += f"\tfloat={report.float_count}"
        return line

    @staticmethod
    def classify_line(graph6: str, family: Optional[FamilyId]) -> str:
        return f"{graph6}\t{family if family is not None else 'none'}"

    @staticmethod
    def report_table(reports: Iterable[EnumerationReport]) -> str:
        """
        Tableau de vérification, une ligne par ordre

        Args:
            reports: Rapports d'énumération
        """
        rows: List[List[str]] = [list(ConsoleUI.TABLE_COLUMNS)]
        for report in reports:
            rows.append([
                str(report.order), str(report.total), str(report.positives), str(report.classified),
                str(len(report.known_omissions)), str(len(report.counterexamples)),
                str(len(report.hagos_failures)),
                str(len(report.float_disagreements)), str(len(report.audit_failures)),
            ])
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows]
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines)

    @staticmethod
    def print_error(message, stream: TextIO):
        """
        Affiche un message d'erreur

        Args:
            message: Message d'erreur à afficher
            stream: Flux de sortie (stderr)
        """
        print(f"{Fore.RED}Erreur: {message}{Style.RESET_ALL}", file=stream)

    @staticmethod
    def print_warning(message, stream: TextIO):
        print(f"{Fore.YELLOW}Avertissement: {message}{Style.RESET_ALL}", file=stream)

    @staticmethod
    def print_success(message, stream: TextIO):
        """Affiche un message de succès"""
        print(f"{Fore.GREEN}Succès: {message}{Style.RESET_ALL}", file=stream)
