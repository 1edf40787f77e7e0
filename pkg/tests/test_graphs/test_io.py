"""
Tests for graph I/O
"""

import pytest
import sys
from pathlib import Path

# Add src to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from graphs.families import complete, empty, hypercube, path
from graphs.graph import GraphInputError, build_graph
from graphs.io import (
    all_labeled_graphs, decode_graph6, encode_graph6, format_edge_list, format_graph_json,
    from_networkx, load_graph_file, parse_edge_list, parse_edge_spec, parse_graph_json,
    read_graph6_corpus, to_networkx
)


class TestGraph6:
    """Test cases for the graph6 codec"""

    @pytest.mark.parametrize("text,graph", [
        ("A_", complete(2)),
        ("Bw", complete(3)),
        ("C~", complete(4)),
        ("C?", empty(4)),
    ])
    def test_known_strings(self, text, graph):
        assert decode_graph6(text) == graph
        assert encode_graph6(graph) == text

    def test_header_accepted(self):
        assert decode_graph6(">>graph6<<Bw") == complete(3)

    def test_round_trip_hypercube(self):
        text = encode_graph6(hypercube(3))
        assert decode_graph6(text) == hypercube(3)

    def test_rejects_garbage(self):
        with pytest.raises(GraphInputError):
            decode_graph6("")
        with pytest.raises(GraphInputError):
            decode_graph6("A")

    def test_rejects_nonzero_padding(self):
        # K_2 is "A_"; "A`" sets a padding bit after the single edge bit
        with pytest.raises(GraphInputError):
            decode_graph6("A`")


class TestTextFormats:
    """Test cases for edge-list, JSON and inline edge formats"""

    def test_edge_list_round_trip(self):
        g = path(4)
        text = format_edge_list(g)
        assert text == "4 3\n0 1\n1 2\n2 3\n"
        assert parse_edge_list(text) == g

    def test_edge_list_comments(self):
        text = "# a triangle\n3 3\n0 1\n\n1 2\n2 0\n"
        assert parse_edge_list(text) == complete(3)

    def test_edge_list_errors(self):
        with pytest.raises(GraphInputError):
            parse_edge_list("")
        with pytest.raises(GraphInputError):
            parse_edge_list("3 2\n0 1\n")
        with pytest.raises(GraphInputError):
            parse_edge_list("3 1\n0 x\n")
        with pytest.raises(GraphInputError):
            parse_edge_list("3 1\n0 3\n")

    def test_json(self):
        g = parse_graph_json('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        assert g == path(3)
        assert parse_graph_json(format_graph_json(g)) == g
        with pytest.raises(GraphInputError):
            parse_graph_json('{"edges": []}')

    def test_inline_edges(self):
        assert parse_edge_spec(3, "0-1, 1-2") == path(3)
        with pytest.raises(GraphInputError):
            parse_edge_spec(3, "0-1-2")

    def test_networkx_round_trip(self):
        g = build_graph(5, [(0, 4), (1, 3)])
        assert from_networkx(to_networkx(g)) == g


class TestFiles:
    """Test cases for file loading and graph6 corpora"""

    def test_load_by_extension(self, tmp_path):
        (tmp_path / "g.edges").write_text("3 2\n0 1\n1 2\n")
        (tmp_path / "g.json").write_text('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        (tmp_path / "g.g6").write_text("Bw\n")
        assert load_graph_file(tmp_path / "g.edges") == path(3)
        assert load_graph_file(tmp_path / "g.json") == path(3)
        assert load_graph_file(tmp_path / "g.g6") == complete(3)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphInputError):
            load_graph_file(tmp_path / "absent.edges")

    def test_corpus_collects_errors(self, tmp_path):
        corpus = tmp_path / "corpus.g6"
        corpus.write_text("A_\nC~~\n\nC~\n")
        load = read_graph6_corpus(corpus)
        assert [graph_id for graph_id, _ in load.graphs] == ["corpus.g6:1", "corpus.g6:4"]
        assert len(load.errors) == 1
        assert load.errors[0].startswith("corpus.g6:2")

    def test_missing_corpus(self, tmp_path):
        """Test that an unreadable corpus is an input error"""
        with pytest.raises(GraphInputError):
            read_graph6_corpus(tmp_path / "absent.g6")

    def test_all_labeled_counts(self):
        assert sum(1 for _ in all_labeled_graphs(3)) == 8
        assert sum(1 for _ in all_labeled_graphs(4)) == 64
        first = next(iter(all_labeled_graphs(4)))
        assert first == empty(4)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
