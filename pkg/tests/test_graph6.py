from __future__ import annotations

import networkx as nx

from domprism import corpus, families, graph6
from domprism.errors import CapacityError, Graph6Error
from tests import base


class TestGraph6(base.TestBase):
    def test_parse(self) -> None:
        self.assertEqual(graph6.parse_graph6("A_"), families.complete(2))
        self.assertEqual(graph6.parse_graph6("Bw"), families.complete(3))
        self.assertEqual(graph6.parse_graph6("@"), families.complete(1))
        self.assertEqual(graph6.parse_graph6(">>graph6<<A_\n"), families.complete(2))
        self.assertEqual(graph6.parse_graph6("A?").num_edges, 0)

        rng = self.rng(31)
        for _ in range(30):
            g = corpus.random_graph(rng.randint(1, 70), rng)
            token = nx.to_graph6_bytes(self.nx_graph(g), header=False)
            parsed = graph6.parse_graph6(token.decode("ascii"))
            self.assertEqual(parsed, g)

    def test_encode(self) -> None:
        self.assertEqual(graph6.encode_graph6(families.complete(2)), "A_")
        self.assertEqual(graph6.encode_graph6(families.complete(3)), "Bw")
        self.assertEqual(graph6.encode_graph6(families.complete(1)), "@")

        rng = self.rng(32)
        for _ in range(30):
            g = corpus.random_graph(rng.randint(1, 70), rng)
            expected = nx.to_graph6_bytes(self.nx_graph(g), header=False)
            self.assertEqual(graph6.encode_graph6(g), expected.decode("ascii").strip())

        # Orders past 62 switch to the four byte size header
        token = graph6.encode_graph6(families.path(63))
        self.assertEqual(token[:4], "~??~")
        self.assertEqual(graph6.parse_graph6(token), families.path(63))

    def test_errors(self) -> None:
        bad = [
            "",
            "   ",
            ">>graph6<<",
            "A_é",
            "A _",
            "?",
            "B",
            "A__",
            "~",
            "~??",
            "~~??",
        ]
        for token in bad:
            self.assertRaises(Graph6Error, graph6.parse_graph6, token)

        with self.assertRaises(Graph6Error) as ctx:
            graph6.parse_graph6("B", line_number=7)
        self.assertEqual(ctx.exception.line_number, 7)
        self.assertTrue(str(ctx.exception).startswith("line 7:"))

        # Padding after the last adjacency bit must be zero
        for token in ["A`", "A~", "Bx"]:
            with self.assertRaises(Graph6Error) as ctx:
                graph6.parse_graph6(token)
            self.assertIn("padding", str(ctx.exception))
        self.assertEqual(graph6.parse_graph6("C~").num_edges, 6)

        # Order 4097 is past the vertex capacity
        self.assertRaises(CapacityError, graph6.parse_graph6, "~@?@")

    def test_read(self) -> None:
        lines = [">>graph6<<A_\n", "\n", "Bw\n", "@"]
        records = list(graph6.read_graph6(lines))
        self.assertEqual([r.line_number for r in records], [1, 3, 4])
        self.assertEqual([r.text for r in records], ["A_", "Bw", "@"])
        self.assertEqual(records[1].graph, families.complete(3))

        stream = graph6.read_graph6(["A_", "", "", "B"])
        self.assertEqual(next(stream).graph, families.complete(2))
        with self.assertRaises(Graph6Error) as ctx:
            next(stream)
        self.assertEqual(ctx.exception.line_number, 4)
