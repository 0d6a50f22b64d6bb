"""
Module: enumeration.py
---------------------
Énumération exhaustive, sans doublon d'isomorphie, des graphes
tricycliques connexes d'un ordre donné, et vérification du théorème de
classification.

Deux stratégies indépendantes se certifient mutuellement:
    - naive: tous les sous-ensembles de n + 2 arêtes (n <= 8), filtrés
      puis dédoublonnés par forme canonique;
    - structured: chaque base tricyclique (balayage des longueurs des 15
      multigraphes réduits) reçoit des arbres enracinés sur ses sommets.

L'espace de recherche est découpé en lots indépendants (premier indice
d'arête, ou base) traités par un pool de threads. Les listes fusionnent les formes
canoniques en un seul point; iter_tricyclic les émet au fil des lots.

Fonctions:
    rooted_trees: Arbres enracinés à isomorphisme près
    tricyclic_bases: Bases tricycliques d'un ordre
    iter_tricyclic: Flux paresseux des classes, lot par lot
    enumerate_tricyclic_naive / enumerate_tricyclic_structured
    count_tricyclic: Nombre de classes à un ordre
    analyse_graph: Analyse complète d'un graphe
    verify_theorem: Rapports d'énumération ordre par ordre

Version: 1.0
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from src.core.audit import audit_structure
from src.core.canonical import canonical_form
from src.core.families import classify, known_omission
from src.core.graph_core import GraphBuilder, is_connected
from src.core.graph_io import parse_graph6, to_graph6
from src.core.linearity import check_two_walk_linear, is_integral
from src.core.spectral import main_eigen_report
from src.models.errors import ParameterError
from src.models.family import FamilyId
from src.models.graph import Graph
from src.models.report import EnumerationReport
from src.models.verdict import Linear, LinearityVerdict
from src.seed.base_catalog import REDUCED_SHAPES
from src.utils.logger_config import get_logger
from src.utils.settings import (
    DEFAULT_SETTINGS,
    NAIVE_MAX_ORDER,
    STRATEGIES,
    STRUCTURED_MAX_ORDER,
    RunSettings,
)

logger = get_logger(__name__)

RootedTree = Tuple["RootedTree", ...]


# ----------------------------------------------------------------------
# Arbres enracinés
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def rooted_trees(size: int) -> Tuple[RootedTree, ...]:
    """
    Arbres enracinés à `size` sommets, à isomorphisme préservant la racine près.

    Un arbre est codé par le tuple trié (décroissant) des codes de ses
    sous-arbres; la feuille est ().
    """
    if size < 1:
        raise ParameterError(f"taille d'arbre {size} < 1")
    if size == 1:
        return ((),)
    smaller = [tree for s in range(size - 1, 0, -1) for tree in rooted_trees(s)]
    sizes = {tree: tree_size(tree) for tree in smaller}

    trees = []

    def forests(total: int, start: int, chosen: List[RootedTree]):
        if total == 0:
            trees.append(tuple(sorted(chosen, reverse=True)))
            return
        for index in range(start, len(smaller)):
            tree = smaller[index]
            if sizes[tree] <= total:
                chosen.append(tree)
                forests(total - sizes[tree], index, chosen)
                chosen.pop()

    forests(size - 1, 0, [])
    return tuple(sorted(set(trees)))


@lru_cache(maxsize=None)
def tree_size(tree: RootedTree) -> int:
    return 1 + sum(tree_size(child) for child in tree)


def _graft(builder: GraphBuilder, root: int, tree: RootedTree):
    for child in tree:
        vertex = builder.add_vertex()
        builder.add_edge(root, vertex)
        _graft(builder, vertex, child)


# ----------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------

def _length_vectors(floors: Sequence[int], extra: int) -> Iterator[Tuple[int, ...]]:
    """Vecteurs de longueurs >= floors dont les sommets intérieurs totalisent `extra`"""
    if not floors:
        if extra == 0:
            yield ()
        return
    head, rest = floors[0], floors[1:]
    minimum_rest = sum(f - 1 for f in rest)
    for length in range(head, extra + 1 - minimum_rest + 1):
        for tail in _length_vectors(rest, extra - (length - 1)):
            yield (length,) + tail


def _realize(branch_count: int, shape, lengths) -> Optional[Graph]:
    """Subdivise les arcs; None si deux arcs parallèles de longueur 1 ou une boucle < 3"""
    direct = set()
    for (u, v), length in zip(shape, lengths):
        if u == v and length < 3:
            return None
        if u != v and length == 1:
            if (u, v) in direct:
                return None
            direct.add((u, v))
    builder = GraphBuilder(branch_count)
    for (u, v), length in zip(shape, lengths):
        builder.add_path(u, v, length)
    return builder.build()


@lru_cache(maxsize=None)
def tricyclic_bases(order: int) -> Tuple[Graph, ...]:
    """Bases tricycliques (degré minimum 2) à `order` sommets, une par classe"""
    found: Dict[bytes, Graph] = {}
    for variants in REDUCED_SHAPES.values():
        for branch_count, shape in variants:
            extra = order - branch_count
            if extra < 0:
                continue
            floors = [3 if u == v else 1 for u, v in shape]
            for lengths in _length_vectors(floors, extra):
                g = _realize(branch_count, shape, lengths)
                if g is not None:
                    found.setdefault(canonical_form(g), g)
    return tuple(found[form] for form in sorted(found))


# ----------------------------------------------------------------------
# Énumérateurs
# ----------------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _decorate(b: Graph, n: int) -> Set[bytes]:
    """Formes canoniques de toutes les façons d'accrocher n - |V(b)| sommets en arbres sur b"""
    shard: Set[bytes] = set()
    for composition in _compositions(n - b.n, b.n):
        choices = [rooted_trees(extra + 1) for extra in composition]
        for trees in product(*choices):
            builder = GraphBuilder(b.n)
            for u, v in b.edges:
                builder.add_edge(u, v)
            for root, tree in enumerate(trees):
                _graft(builder, root, tree)
            shard.add(canonical_form(builder.build()))
    return shard


def _naive_shard(n: int, pairs: List[Tuple[int, int]], first: int) -> Set[bytes]:
    shard: Set[bytes] = set()
    for rest in combinations(range(first + 1, len(pairs)), n + 1):
        chosen = (first,) + rest
        degrees = [0] * n
        for index in chosen:
            u, v = pairs[index]
            degrees[u] += 1
            degrees[v] += 1
        if degrees[-1] < 1 or any(degrees[i] < degrees[i + 1] for i in range(n - 1)):
            continue
        g = Graph(n, tuple(sorted(pairs[index] for index in chosen)))
        if is_connected(g):
            shard.add(canonical_form(g))
    return shard


def _merge(shards: Iterable[Set[bytes]]) -> List[Graph]:
    """Point de jonction: union des formes, représentants canoniques triés"""
    merged: Set[bytes] = set()
    for shard in shards:
        merged |= shard
    return [parse_graph6(form.decode("ascii")) for form in sorted(merged)]


def _shard_results(function, arguments: Sequence, threads: int) -> Iterator[Set[bytes]]:
    """Résultats des lots dans l'ordre de soumission, quel que soit l'ordre d'achèvement"""
    if threads <= 1 or len(arguments) <= 1:
        for args in arguments:
            yield function(*args)
        return
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="Shard") as pool:
        futures = [pool.submit(function, *args) for args in arguments]
        for future in futures:
            yield future.result()


def _naive_arguments(n: int) -> List[Tuple]:
    if n > NAIVE_MAX_ORDER:
        raise ParameterError(f"énumération naïve limitée à n <= {NAIVE_MAX_ORDER} (reçu {n})")
    if n < 1:
        return []
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if n + 2 > len(pairs):
        return []
    return [(n, pairs, first) for first in range(len(pairs) - n - 1)]


def _structured_arguments(n: int) -> List[Tuple]:
    if n > STRUCTURED_MAX_ORDER:
        raise ParameterError(f"énumération structurée limitée à n <= {STRUCTURED_MAX_ORDER} (reçu {n})")
    return [(b, n) for order in range(4, n + 1) for b in tricyclic_bases(order)]


def _plan(n: int, strategy: str):
    if strategy == "naive":
        return _naive_shard, _naive_arguments(n)
    if strategy == "structured":
        return _decorate, _structured_arguments(n)
    raise ParameterError(f"stratégie inconnue {strategy!r} (attendu: {', '.join(STRATEGIES)})")


def _stream(function, arguments: Sequence, threads: int) -> Iterator[Graph]:
    seen: Set[bytes] = set()
    for shard in _shard_results(function, arguments, threads):
        for form in sorted(shard - seen):
            seen.add(form)
            yield parse_graph6(form.decode("ascii"))


def iter_tricyclic(n: int, strategy: str = "structured", threads: int = 1) -> Iterator[Graph]:
    """
    Flux paresseux des graphes tricycliques connexes à n sommets.

    Chaque classe sort une fois, sous son représentant canonique, dès que
    son lot est terminé; seules les formes canoniques déjà émises sont
    gardées en mémoire. L'ordre suit les lots, pas les formes.

    :raises ParameterError: stratégie inconnue ou borne dépassée (dès l'appel)
    """
    function, arguments = _plan(n, strategy)
    return _stream(function, arguments, threads)


def enumerate_tricyclic_naive(n: int, threads: int = 1) -> List[Graph]:
    """
    Graphes tricycliques connexes à n sommets par force brute.

    Seuls les étiquetages de degrés décroissants sont gardés (toute classe
    en possède un), avant le test de connexité et le dédoublonnage.

    :raises ParameterError: n > 8
    """
    graphs = _merge(_shard_results(_naive_shard, _naive_arguments(n), threads))
    logger.debug(f"naïve n={n}: {len(graphs)} classe(s)")
    return graphs


def enumerate_tricyclic_structured(n: int, threads: int = 1) -> List[Graph]:
    """Graphes tricycliques connexes à n sommets: bases + arbres accrochés"""
    arguments = _structured_arguments(n)
    graphs = _merge(_shard_results(_decorate, arguments, threads))
    logger.debug(f"structurée n={n}: {len(graphs)} classe(s) depuis {len(arguments)} base(s)")
    return graphs


def enumerate_tricyclic(n: int, strategy: str = "structured", threads: int = 1) -> List[Graph]:
    """Liste triée par forme canonique, identique pour les deux stratégies"""
    function, arguments = _plan(n, strategy)
    return _merge(_shard_results(function, arguments, threads))


def count_tricyclic(n: int, strategy: str = "structured", threads: int = 1) -> int:
    return len(enumerate_tricyclic(n, strategy, threads))


# ----------------------------------------------------------------------
# Vérification du théorème
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GraphAnalysis:
    """Résultat de l'analyse d'un graphe énuméré"""
    graph6: str
    exact_count: int
    float_count: Optional[int]
    verdict: LinearityVerdict
    family: Optional[FamilyId]
    audit: Tuple[str, ...]
    omission: bool = False

    @property
    def positive(self) -> bool:
        return self.exact_count == 2

    @property
    def hagos_ok(self) -> bool:
        return self.positive == isinstance(self.verdict, Linear)

    @property
    def counterexample(self) -> bool:
        return self.positive != (self.family is not None) and not self.omission


def analyse_graph(g: Graph, with_float: bool = True,
                  settings: RunSettings = DEFAULT_SETTINGS) -> GraphAnalysis:
    report = main_eigen_report(g, with_float, settings)
    verdict = check_two_walk_linear(g)
    positive = report.exact_count == 2
    family = classify(g)
    return GraphAnalysis(
        graph6=to_graph6(g),
        exact_count=report.exact_count,
        float_count=report.float_count,
        verdict=verdict,
        family=family,
        audit=tuple(audit_structure(g, verdict)) if positive else (),
        omission=positive and family is None and known_omission(g) is not None,
    )


def _record(report: EnumerationReport, analysis: GraphAnalysis):
    report.total += 1
    code = analysis.graph6
    if analysis.positive:
        report.positives += 1
        report.positive_graph6.append(code)
    if analysis.family is not None:
        report.classified += 1
        label = analysis.family.label()
        report.classified_by_family[label] = report.classified_by_family.get(label, 0) + 1
    if analysis.omission:
        report.known_omissions.append(code)
        logger.warning(f"positif connu hors catalogue n={report.order}: {code} ({analysis.verdict})")
    if analysis.counterexample:
        report.counterexamples.append(code)
        logger.warning(f"contre-exemple n={report.order}: {code} "
                       f"(valeurs principales {analysis.exact_count}, catalogue {analysis.family})")
    if not analysis.hagos_ok:
        report.hagos_failures.append(code)
        logger.warning(f"équivalence de Hagos violée: {code} ({analysis.verdict})")
    if analysis.float_count is not None and analysis.float_count != analysis.exact_count:
        report.float_disagreements.append(code)
    if isinstance(analysis.verdict, Linear) and not is_integral(analysis.verdict):
        report.non_integral.append(code)
        logger.warning(f"verdict non entier: {code} ({analysis.verdict})")
    for message in analysis.audit:
        report.audit_failures.append(f"{code}: {message}")
        logger.warning(f"audit structurel {code}: {message}")


def verify_order(n: int, strategy: str = "structured", threads: int = 1, with_float: bool = True,
                 settings: RunSettings = DEFAULT_SETTINGS) -> EnumerationReport:
    """
    Analyse chaque graphe du flux iter_tricyclic dès sa sortie; les listes
    du rapport sont triées à la fin, donc indépendantes de la stratégie.
    """
    graphs = iter_tricyclic(n, strategy, threads)
    report = EnumerationReport(order=n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="Analyse") as pool:
            for analysis in pool.map(lambda g: analyse_graph(g, with_float, settings), graphs):
                _record(report, analysis)
    else:
        for g in graphs:
            _record(report, analyse_graph(g, with_float, settings))
    report.sort_lists()
    logger.info(f"n={n}: {report.total} graphe(s), {report.positives} positif(s), "
                f"{report.classified} classé(s), {len(report.known_omissions)} omission(s) connue(s), "
                f"{len(report.counterexamples)} contre-exemple(s)")
    return report


def verify_theorem(n_max: int, strategy: str = "structured", threads: int = 1, with_float: bool = True,
                   settings: RunSettings = DEFAULT_SETTINGS) -> List[EnumerationReport]:
    """
    Un rapport par ordre 1..n_max. Un graphe est un contre-exemple ssi
    (exactement deux valeurs propres principales) XOR (présent au catalogue),
    sauf s'il figure parmi les omissions connues (rapportées à part).

    :raises ParameterError: borne de la stratégie dépassée
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"stratégie inconnue {strategy!r}")
    bound = NAIVE_MAX_ORDER if strategy == "naive" else STRUCTURED_MAX_ORDER
    if n_max > bound:
        raise ParameterError(f"stratégie {strategy}: ordre maximal {bound} (reçu {n_max})")
    return [verify_order(n, strategy, threads, with_float, settings) for n in range(1, n_max + 1)]
