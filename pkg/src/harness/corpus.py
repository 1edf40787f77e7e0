"""
Graph Corpora

Each corpus is a list of (graph id, Graph) pairs in a fixed order so that
reports can be reproduced exactly.
"""

import logging
from typing import List, Sequence, Tuple

import networkx as nx
import numpy as np

from config import get_config
from graphs.graph import Graph, build_graph
from graphs.io import CorpusLoad, all_labeled_graphs, from_networkx, read_graph6_corpus
from graphs.structure import has_isolated_vertices, is_connected

logger = logging.getLogger(__name__)

Corpus = List[Tuple[str, Graph]]


def all_labeled_corpus(n: int, isolate_free: bool = False) -> Corpus:
    """Every labelled graph on n vertices, optionally without isolated vertices"""
    corpus: Corpus = []
    for index, graph in enumerate(all_labeled_graphs(n)):
        if isolate_free and has_isolated_vertices(graph):
            continue
        corpus.append((f"L{n}-{index:06d}", graph))
    logger.info(f"all-labeled corpus n={n}: {len(corpus)} graphs")
    return corpus


def random_corpus(
    count: int = None,
    n_range: Tuple[int, int] = (7, 12),
    densities: Sequence[float] = None,
    seed: int = None,
) -> Corpus:
    """
    Seeded G(n, p) graphs

    Orders are drawn uniformly from n_range (inclusive) and densities are
    used round-robin, so the corpus is a pure function of its arguments.
    """
    harness = get_config().harness
    count = harness.random_count if count is None else count
    densities = list(densities or harness.densities)
    seed = harness.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    lo, hi = n_range
    corpus: Corpus = []
    for index in range(count):
        n = int(rng.integers(lo, hi + 1))
        p = densities[index % len(densities)]
        coins = rng.random((n, n))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v] < p]
        corpus.append((f"R{seed}-{index:04d}-n{n}-p{p}", build_graph(n, edges)))
    return corpus


def graph6_corpus(path) -> CorpusLoad:
    """graph6 file corpus; malformed lines are collected, not fatal"""
    load = read_graph6_corpus(path)
    if load.errors:
        logger.warning(f"{path}: {len(load.errors)} malformed line(s) skipped")
    return load


def atlas_corpus(max_n: int = 4, connected_only: bool = True) -> Corpus:
    """Non-isomorphic graphs from the networkx graph atlas (n <= 7)"""
    if max_n > 7:
        raise ValueError(f"the graph atlas stops at 7 vertices, got max_n={max_n}")
    corpus: Corpus = []
    for index, g in enumerate(nx.graph_atlas_g()):
        if g.number_of_nodes() == 0 or g.number_of_nodes() > max_n:
            continue
        graph = from_networkx(g)
        if connected_only and not is_connected(graph):
            continue
        corpus.append((f"A{index:04d}", graph))
    return corpus
