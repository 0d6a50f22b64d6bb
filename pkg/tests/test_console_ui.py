import io
from fractions import Fraction

from src.models.family import FamilyId
from src.models.report import EnumerationReport, MainEigenReport
from src.models.verdict import Linear, Regular
from src.ui.console_ui import ConsoleUI


def test_check_line():
    assert ConsoleUI.check_line("C~", Regular(3), MainEigenReport(1)) == "C~\tregular\tmain=1"
    line = ConsoleUI.check_line("F?", Linear(Fraction(1), Fraction(6)), MainEigenReport(2, 2, (3.0, -2.0)))
    assert line == "F?\tlinear(1,6)\tmain=2\tfloat=2"


def test_classify_line():
    assert ConsoleUI.classify_line("C~", None) == "C~\tnone"
    assert ConsoleUI.classify_line("X", FamilyId.g(2, 0, 1)) == "X\tG2(0,1)"


def test_report_table_columns_align():
    reports = [EnumerationReport(order=4, total=1), EnumerationReport(order=5, total=4, positives=1, classified=1)]
    lines = ConsoleUI.report_table(reports).splitlines()
    assert len(lines) == 4
    assert set(lines[1]) == {"-"}
    assert len({len(line) for line in lines}) == 1
    assert lines[3].split() == ["5", "4", "1", "1", "0", "0", "0", "0", "0"]


def test_report_table_counts_known_omissions_apart():
    report = EnumerationReport(order=8, total=486, positives=10, classified=9, known_omissions=["G@`@W{"])
    header, _, row = ConsoleUI.report_table([report]).splitlines()
    cells = dict(zip(header.split(), row.split()))
    assert cells["omis"] == "1"
    assert cells["contre-ex."] == "0"


def test_messages_go_to_stream():
    stream = io.StringIO()
    ConsoleUI.print_error("graph6 vide", stream)
    ConsoleUI.print_warning("anomalies", stream)
    ConsoleUI.print_success("fini", stream)
    text = stream.getvalue()
    assert "Erreur: graph6 vide" in text
    assert "Avertissement: anomalies" in text
    assert "Succès: fini" in text
