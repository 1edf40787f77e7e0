"""
Graph I/O
graph6 strings, edge-list text, JSON graph documents and NetworkX conversion
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator, List, Tuple

import networkx as nx
from pydantic import BaseModel, ValidationError

from graphs.graph import Graph, GraphInputError, build_graph

logger = logging.getLogger(__name__)


class GraphDocument(BaseModel):
    """JSON graph object: {"n": int, "edges": [[u, v], ...]}"""
    n: int
    edges: List[Tuple[int, int]] = []

    def to_graph(self) -> Graph:
        return build_graph(self.n, self.edges)


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def from_networkx(g: nx.Graph) -> Graph:
    """Convert a NetworkX graph; nodes are numbered in iteration order"""
    h = nx.convert_node_labels_to_integers(g, ordering="default")
    return build_graph(h.number_of_nodes(), h.edges())


def decode_graph6(text: str) -> Graph:
    """
    Decode one graph6 string (an optional >>graph6<< header is accepted)

    Strings whose padding bits are not zero are rejected so that
    encode_graph6(decode_graph6(s)) == s for every accepted s.
    """
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphInputError("empty graph6 string")
    try:
        graph = from_networkx(nx.from_graph6_bytes(text.encode("ascii")))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphInputError(f"invalid graph6 string {text!r}: {e}") from e
    if encode_graph6(graph) != text:
        raise GraphInputError(f"graph6 string {text!r} has non-zero padding bits")
    return graph


def encode_graph6(graph: Graph) -> str:
    """graph6 string without header or trailing newline"""
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format: first line "n m", then m lines "u v"

    Blank lines and lines starting with '#' are ignored.
    """
    lines = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphInputError("edge list is empty")
    try:
        n, m = (int(x) for x in lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as e:
        raise GraphInputError(f"malformed edge list: {e}") from e
    if len(edges) != m:
        raise GraphInputError(f"edge list header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        return GraphDocument.model_validate_json(text).to_graph()
    except ValidationError as e:
        raise GraphInputError(f"invalid JSON graph document: {e}") from e


def format_graph_json(graph: Graph) -> str:
    return json.dumps(graph.to_dict())


def parse_edge_spec(n: int, spec: str) -> Graph:
    """Inline edges such as "0-1,1-2" on n vertices"""
    edges = []
    for token in filter(None, (t.strip() for t in spec.split(","))):
        try:
            u, v = (int(x) for x in token.split("-"))
        except ValueError as e:
            raise GraphInputError(f"malformed inline edge {token!r}") from e
        edges.append((u, v))
    return build_graph(n, edges)


def load_graph_file(path) -> Graph:
    """Load a graph by file extension: .json, .g6, anything else is an edge list"""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise GraphInputError(f"cannot read {path}: {e}") from e
    suffix = path.suffix.lower()
    if suffix == ".json":
        return parse_graph_json(text)
    if suffix == ".g6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphInputError(f"{path} holds {len(lines)} graph6 lines; use a sweep for corpora")
        return decode_graph6(lines[0])
    return parse_edge_list(text)


@dataclass
class CorpusLoad:
    """Graphs read from a graph6 corpus plus per-line diagnostics"""
    graphs: List[Tuple[str, Graph]] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)


def read_graph6_corpus(path) -> CorpusLoad:
    """Read one graph6 string per line; bad lines are reported, not fatal"""
    result = CorpusLoad()
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise GraphInputError(f"cannot read {path}: {e}") from e
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            result.graphs.append((f"{path.name}:{number}", decode_graph6(line)))
        except GraphInputError as e:
            message = f"{path.name}:{number}: {e}"
            logger.error(message)
            result.errors.append(message)
    return result


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices, by increasing edge mask"""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
