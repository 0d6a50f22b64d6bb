"""
Module: graph_io.py
------------------
Lecture et écriture des graphes au format graph6 et en liste d'arêtes.

graph6: en-tête N(n) puis le triangle supérieur de la matrice
d'adjacence, colonne par colonne, empaqueté par groupes de 6 bits
décalés de 63. Le format liste d'arêtes est une ligne "n m" suivie de m
lignes "u v" (sommets 0..n-1).

Fonctions:
    parse_graph6: Décode une ligne graph6
    to_graph6: Encode un graphe en graph6
    parse_edge_list: Décode un bloc liste d'arêtes
    to_edge_list: Encode un graphe en liste d'arêtes
    read_graphs: Lit un flux de graphes, format détecté ou imposé
    write_graphs: Écrit une suite de graphes dans le format demandé

Version: 1.0
"""

from typing import Iterable, Iterator, List

from src.core.graph_core import from_edge_list
from src.models.errors import GraphFormatError
from src.models.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
FORMATS = ("auto", "graph6", "edgelist")

_MIN_CHAR = 63
_MAX_CHAR = 126


def _decode_size(data: str):
    """Renvoie (n, position du premier octet de données)"""
    if not data:
        raise GraphFormatError("graph6 vide")
    first = ord(data[0])
    if first < _MIN_CHAR or first > _MAX_CHAR:
        raise GraphFormatError(f"caractère d'en-tête graph6 invalide: {data[0]!r}")
    if first != _MAX_CHAR:
        return first - _MIN_CHAR, 1
    if len(data) >= 2 and ord(data[1]) == _MAX_CHAR:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise GraphFormatError("en-tête graph6 tronqué")
    n = 0
    for char in chunk:
        value = ord(char) - _MIN_CHAR
        if not 0 <= value < 64:
            raise GraphFormatError(f"caractère d'en-tête graph6 invalide: {char!r}")
        n = (n << 6) | value
    return n, start + width


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + _MIN_CHAR)
    if n < 258048:
        return "~" + "".join(chr(((n >> shift) & 63) + _MIN_CHAR) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + _MIN_CHAR) for shift in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str) -> Graph:
    """
    Décode une ligne graph6.

    :param text: Chaîne graph6, en-tête ">>graph6<<" optionnel
    :raises GraphFormatError: En-tête invalide, bits tronqués ou données en trop
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if data[:1] in (":", "&", ";"):
        raise GraphFormatError("sparse6 et digraph6 ne sont pas pris en charge")
    n, position = _decode_size(data)
    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    payload = data[position:]
    if len(payload) < byte_count:
        raise GraphFormatError(
            f"graph6 tronqué: {len(payload)} octets de données, {byte_count} attendus pour n={n}"
        )
    if len(payload) > byte_count:
        raise GraphFormatError(f"données superflues après le graphe: {payload[byte_count:]!r}")

    bits = 0
    for char in payload:
        value = ord(char) - _MIN_CHAR
        if not 0 <= value < 64:
            raise GraphFormatError(f"caractère graph6 invalide: {char!r}")
        bits = (bits << 6) | value
    padding = byte_count * 6 - bit_count
    if bits & ((1 << padding) - 1):
        raise GraphFormatError("bits de remplissage graph6 non nuls")
    bits >>= padding

    edges = []
    index = bit_count - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> index) & 1:
                edges.append((i, j))
            index -= 1
    return from_edge_list(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode g en graph6 (sans en-tête ">>graph6<<")"""
    chars = [_encode_size(g.n)]
    buffer, filled = 0, 0
    for j in range(1, g.n):
        row = g.neighbour_sets[j]
        for i in range(j):
            buffer = (buffer << 1) | (i in row)
            filled += 1
            if filled == 6:
                chars.append(chr(buffer + _MIN_CHAR))
                buffer, filled = 0, 0
    if filled:
        chars.append(chr((buffer << (6 - filled)) + _MIN_CHAR))
    return "".join(chars)


def _parse_pair(line: str, what: str):
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"{what} attendu sous la forme de deux entiers: {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise GraphFormatError(f"{what} non entier: {line!r}") from exc


def _meaningful_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _read_edge_block(lines: List[str], start: int):
    n, m = _parse_pair(lines[start], "en-tête 'n m'")
    if n < 0 or m < 0:
        raise GraphFormatError(f"en-tête négatif: {lines[start]!r}")
    if start + 1 + m > len(lines):
        raise GraphFormatError(f"liste d'arêtes tronquée: {m} arêtes annoncées")
    pairs = [_parse_pair(lines[start + 1 + k], "arête") for k in range(m)]
    return from_edge_list(n, pairs), start + 1 + m


def parse_edge_list(text: str) -> Graph:
    """
    Décode un unique graphe en liste d'arêtes.

    :raises GraphFormatError: Texte mal formé ou lignes superflues
    """
    lines = _meaningful_lines(text)
    if not lines:
        raise GraphFormatError("liste d'arêtes vide")
    g, end = _read_edge_block(lines, 0)
    if end != len(lines):
        raise GraphFormatError(f"lignes superflues après la liste d'arêtes: {lines[end]!r}")
    return g


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines)


def _looks_like_edge_header(line: str) -> bool:
    parts = line.split()
    return len(parts) == 2 and all(part.lstrip("-").isdigit() for part in parts)


def read_graphs(text: str, fmt: str = "auto") -> Iterator[Graph]:
    """
    Lit une suite de graphes.

    En mode "auto", une ligne formée de deux entiers ouvre un bloc liste
    d'arêtes; toute autre ligne est décodée en graph6. Les chiffres et
    l'espace n'appartiennent pas à l'alphabet graph6, donc la détection
    est sans ambiguïté.

    :param text: Contenu complet du flux
    :param fmt: "auto", "graph6" ou "edgelist"
    """
    if fmt not in FORMATS:
        raise GraphFormatError(f"format inconnu: {fmt}")
    lines = _meaningful_lines(text)
    position = 0
    while position < len(lines):
        line = lines[position]
        if fmt == "edgelist" or (fmt == "auto" and _looks_like_edge_header(line)):
            g, position = _read_edge_block(lines, position)
            yield g
        else:
            yield parse_graph6(line)
            position += 1


def write_graphs(graphs: Iterable[Graph], fmt: str = "graph6") -> str:
    """Concatène les graphes, un graph6 par ligne ou des blocs liste d'arêtes"""
    if fmt == "edgelist":
        return "".join(to_edge_list(g) + "\n" for g in graphs)
    if fmt == "graph6":
        return "".join(to_graph6(g) + "\n" for g in graphs)
    raise GraphFormatError(f"format de sortie inconnu: {fmt}")
