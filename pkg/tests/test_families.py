from __future__ import annotations

from domprism import corpus, families, graph
from domprism.domination import (
    domination_number,
    is_dominating,
    total_domination_number,
)
from domprism.errors import CapacityError, GraphError
from domprism.families import Family, FamilySpec
from domprism.vertexset import VertexSet
from tests import base


class TestFamilies(base.TestBase):
    def test_hypercube(self) -> None:
        self.assertEqual(families.hypercube(1), families.complete(2))
        self.assertEqual(
            corpus.canonical_form(families.hypercube(2)),
            corpus.canonical_form(families.cycle(4)),
        )
        q4 = families.hypercube(4)
        self.assertEqual(q4.n, 16)
        self.assertEqual(q4.num_edges, 32)
        self.assertEqual(set(q4.degrees()), {4})
        self.assertEqual(q4.prism_order, 8)
        self.assertTrue(q4.is_prism)
        for n in range(2, 8):
            q = families.hypercube(n)
            self.assertEqual(q, graph.prism(families.hypercube(n - 1)), f"Q{n}")
            self.assertEqual(graph.partner(q, q.n - 1), q.n - 2)

        self.assertRaises(GraphError, families.hypercube, 0)
        self.assertRaises(CapacityError, families.hypercube, 13)

    def test_small_families(self) -> None:
        self.assertEqual(families.cycle(7).num_edges, 7)
        self.assertEqual(families.path(3).edges(), [(0, 1), (1, 2)])
        self.assertEqual(families.path(1).num_edges, 0)
        self.assertEqual(families.complete(4).num_edges, 6)
        self.assertEqual(families.star(3).degrees(), [3, 1, 1, 1])
        self.assertRaises(GraphError, families.cycle, 2)
        self.assertRaises(GraphError, families.star, 0)

    def test_chained_five_cycles(self) -> None:
        self.assertEqual(families.chained_five_cycles(1), families.cycle(7))
        for k in range(2, 6):
            g = families.chained_five_cycles(k)
            self.assertEqual(g.n, 5 * k)
            self.assertEqual(g.num_edges, 6 * k - 1)
            self.assertTrue(graph.is_connected(g))
        g2 = families.chained_five_cycles(2)
        self.assertTrue(g2.has_edge(4, 5))
        self.assertTrue(g2.has_edge(0, 1))
        self.assertTrue(g2.has_edge(1, 3))
        self.assertFalse(g2.has_edge(0, 3))
        self.assertRaises(GraphError, families.chained_five_cycles, 0)

        self.assertEqual(domination_number(g2).value, 4)
        self.assertEqual(total_domination_number(graph.prism(g2)).value, 6)
        g3 = families.chained_five_cycles(3)
        self.assertEqual(domination_number(g3).value, 6)
        self.assertEqual(total_domination_number(graph.prism(g3)).value, 9)

    def test_hamming_code(self) -> None:
        self.assertEqual(families.hamming_perfect_code(1), VertexSet(2, 0b1))
        self.assertEqual(families.hamming_perfect_code(2).to_list(), [0, 7])

        code = families.hamming_perfect_code(3)
        self.assertEqual(code.universe_size, 128)
        self.assertEqual(len(code), 16)
        q7 = families.hypercube(7)
        covered = 0
        for c in code:
            ball = q7.closed_neighbors(c).mask
            self.assertEqual(covered & ball, 0)
            covered |= ball
        self.assertEqual(covered, (1 << 128) - 1)
        self.assertRaises(GraphError, families.hamming_perfect_code, 0)

    def test_doubled_code(self) -> None:
        for k, size in [(1, 2), (2, 4), (3, 32)]:
            d = families.doubled_code_dominating_set(k)
            self.assertEqual(len(d), size)
            self.assertTrue(is_dominating(families.hypercube(1 << k), d), f"k={k}")

    def test_prop1_witness(self) -> None:
        self.assertEqual(families.prop1_witness(1).to_list(), [0, 2, 7, 9, 12])
        for k in (1, 2, 3):
            w = families.prop1_witness(k)
            self.assertEqual(w.universe_size, 2 * (6 * k + 1))
            self.assertEqual(len(w), 4 * k + 1)
        c13_prism = graph.prism(families.cycle(13))
        self.assertEqual(total_domination_number(c13_prism).value, 9)
        self.assertRaises(GraphError, families.prop1_witness, 0)

    def test_claim_b_witness(self) -> None:
        for k in range(2, 7):
            w = families.claimB_witness(k)
            self.assertEqual(w.universe_size, 10 * k)
            self.assertEqual(len(w), 3 * k)
            for block in range(k):
                inside = [v for v in w if 5 * block <= v >> 1 < 5 * block + 5]
                self.assertEqual(len(inside), 3, f"k={k} block {block}")
        self.assertRaises(GraphError, families.claimB_witness, 1)

        figure = families.figure_one_witness()
        self.assertEqual(len(figure), 18)
        self.assertEqual(figure, families.claimB_witness(6))
        self.assertEqual(len(families.FIGURE_ONE), 18)

    def test_family_spec(self) -> None:
        spec = families.parse_family_spec("Q5")
        self.assertEqual(spec, FamilySpec(Family.HYPERCUBE, 5))
        self.assertEqual(str(spec), "Q5")
        self.assertEqual(spec.build(), families.hypercube(5))
        self.assertEqual(families.parse_family_spec(" G3\n").build().n, 15)
        self.assertEqual(families.parse_family_spec("C13").build(), families.cycle(13))
        self.assertEqual(families.parse_family_spec("P4").build(), families.path(4))
        self.assertEqual(families.parse_family_spec("K7").build().num_edges, 21)
        self.assertEqual(families.parse_family_spec("S3").build(), families.star(3))

        for text in ["", "X5", "Q", "q5", "Q-1", "Q5a", "A_"]:
            self.assertRaises(GraphError, families.parse_family_spec, text)
        self.assertRaises(GraphError, families.parse_family_spec, "C2")
        self.assertRaises(GraphError, families.parse_family_spec, "Q0")
        self.assertRaises(GraphError, FamilySpec, Family.CHAINED_FIVE_CYCLES, 0)
