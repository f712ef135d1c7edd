from __future__ import annotations

import typing as t

from domprism import corpus, domination, families
from domprism.domination import DominationKind, Method
from domprism.errors import (
    CertificateError,
    EmptyEdgeError,
    NotFoundError,
    UndecidedError,
)
from domprism.graph import cartesian_product, Graph, make_graph, prism
from domprism.vertexset import VertexSet
from tests import base


def _vs(g: Graph, members: t.Iterable[int]) -> VertexSet:
    return VertexSet.of(g.n, members)


class TestDomination(base.TestBase):
    def test_certificates(self) -> None:
        k1 = families.complete(1)
        k2 = families.complete(2)
        c7 = families.cycle(7)
        q3 = families.hypercube(3)
        p3 = families.path(3)

        ###### Dominating #####
        self.assertTrue(domination.is_dominating(k1, _vs(k1, [0])))
        self.assertFalse(domination.is_dominating(c7, _vs(c7, [0, 3])))
        self.assertTrue(domination.is_dominating(q3, _vs(q3, [0b000, 0b111])))

        ###### Total #####
        self.assertTrue(domination.is_total_dominating(k2, _vs(k2, [0, 1])))
        self.assertFalse(domination.is_total_dominating(q3, _vs(q3, [0b000, 0b111])))
        self.assertTrue(
            domination.is_total_dominating(
                prism(c7),
                families.prop1_witness(1),
            ),
        )

        ###### Paired #####
        self.assertTrue(domination.is_paired_dominating(k2, _vs(k2, [0, 1])))
        p3_prism = prism(p3)
        middle = VertexSet.of(6, [2, 3])
        self.assertTrue(domination.is_paired_dominating(p3_prism, middle))
        # Odd sets never pair up
        self.assertFalse(domination.is_paired_dominating(k2, _vs(k2, [0])))
        self.assertFalse(
            domination.is_paired_dominating(prism(c7), families.prop1_witness(1)),
        )

        ###### Total restrained #####
        c4 = families.cycle(4)
        self.assertTrue(domination.is_total_restrained_dominating(c4, _vs(c4, [0, 1])))
        self.assertFalse(
            domination.is_total_restrained_dominating(p3, _vs(p3, [0, 1])),
        )
        q2 = families.hypercube(2)
        doubled = domination.doubling_construction(q2, _vs(q2, [0, 3]))
        self.assertTrue(
            domination.is_total_restrained_dominating(prism(q2), doubled),
        )

        checker = domination.CHECKERS[DominationKind.PAIRED]
        self.assertIs(checker, domination.is_paired_dominating)

    def test_perfect_matching(self) -> None:
        p3 = families.path(3)
        c5 = families.cycle(5)
        c6 = families.cycle(6)
        self.assertTrue(domination.has_perfect_matching(p3, VertexSet(3)))
        self.assertFalse(domination.has_perfect_matching(p3, _vs(p3, [0, 2])))
        self.assertFalse(domination.has_perfect_matching(c5, VertexSet.full(5)))
        self.assertTrue(domination.has_perfect_matching(c6, VertexSet.full(6)))
        # K_{1,3} plus nothing: center matches one leaf only
        s3 = families.star(3)
        self.assertFalse(domination.has_perfect_matching(s3, VertexSet.full(4)))
        self.assertTrue(domination.has_perfect_matching(s3, _vs(s3, [0, 2])))

    def test_numbers(self) -> None:
        c7 = families.cycle(7)
        q3 = families.hypercube(3)
        q4 = families.hypercube(4)

        result = domination.domination_number(c7)
        self.assertEqual(result.value, 3)
        self.assertEqual(result.kind, DominationKind.PLAIN)
        self.assertEqual(result.method, Method.TRANSVERSAL_REDUCTION)
        self.assertTrue(domination.is_dominating(c7, result.witness))

        self.assertEqual(domination.total_domination_number(q4).value, 4)
        q5 = families.hypercube(5)
        self.assertEqual(domination.total_domination_number(q5).value, 8)
        # Grids: a middle line totally dominates the 3x3 and the 4x3
        p3 = families.path(3)
        p4 = families.path(4)
        grid = cartesian_product(p3, p3)
        self.assertEqual(domination.total_domination_number(grid).value, 3)
        grid = cartesian_product(p4, p3)
        self.assertEqual(domination.total_domination_number(grid).value, 4)
        grid = cartesian_product(p4, p4)
        self.assertEqual(domination.total_domination_number(grid).value, 6)
        self.assertEqual(domination.domination_number(p4).value, 2)

        result = domination.paired_domination_number(families.complete(2))
        self.assertEqual(result.value, 2)
        self.assertEqual(result.method, Method.DIRECT_SEARCH)
        result = domination.paired_domination_number(c7)
        self.assertEqual(result.value, 4)
        self.assertTrue(domination.is_paired_dominating(c7, result.witness))
        self.assertEqual(domination.paired_domination_number(q3).value, 4)

        self.assertEqual(
            domination.total_restrained_domination_number(families.cycle(4)).value,
            2,
        )
        result = domination.total_restrained_domination_number(p3)
        self.assertEqual(result.value, 3)
        self.assertEqual(result.witness, VertexSet.full(3))
        self.assertEqual(domination.total_restrained_domination_number(q4).value, 4)
        # Stars only admit the whole vertex set
        self.assertEqual(
            domination.total_restrained_domination_number(families.star(3)).value,
            4,
        )

        if base.SLOW:
            self.assertEqual(domination.domination_number(q5).value, 7)

    def test_dispatch_against_brute_force(self) -> None:
        rng = self.rng(21)
        for _ in range(60):
            g = corpus.random_connected_graph(rng.randint(2, 7), rng)
            values: t.Dict[DominationKind, int] = {}
            for kind in DominationKind:
                result = domination.invariant(g, kind)
                self.assertEqual(result.kind, kind)
                self.assertTrue(domination.CHECKERS[kind](g, result.witness))
                self.assertEqual(len(result.witness), result.value)
                oracle = domination.brute_force_minimum(g, kind)
                self.assertEqual(result.value, oracle.value, f"{kind} {g.edges()}")
                values[kind] = result.value
            gamma = values[DominationKind.PLAIN]
            gamma_t = values[DominationKind.TOTAL]
            self.assertLessEqual(gamma, gamma_t)
            self.assertLessEqual(gamma_t, values[DominationKind.PAIRED])
            self.assertLessEqual(
                gamma_t,
                values[DominationKind.TOTAL_RESTRAINED],
            )
            self.assertLessEqual(
                domination.total_domination_degree_bound(g),
                gamma_t,
            )

    def test_brute_force(self) -> None:
        p3 = families.path(3)
        result = domination.brute_force_minimum(p3, DominationKind.PLAIN)
        self.assertEqual(result.value, 1)
        self.assertEqual(result.witness.to_list(), [1])
        c7 = families.cycle(7)
        result = domination.brute_force_minimum(c7, DominationKind.TOTAL)
        self.assertEqual(result.value, 4)
        q3 = families.hypercube(3)
        result = domination.brute_force_minimum(q3, DominationKind.PLAIN)
        self.assertEqual(result.value, 2)
        self.assertEqual(
            domination.brute_force_minimum(c7, DominationKind.TOTAL_RESTRAINED).value,
            domination.total_restrained_domination_number(c7).value,
        )

        self.assertRaises(
            NotFoundError,
            domination.brute_force_minimum,
            c7,
            DominationKind.TOTAL,
            3,
        )
        # Isolated vertex: nothing is total dominating
        g = make_graph(3, [(0, 1)])
        self.assertRaises(
            NotFoundError,
            domination.brute_force_minimum,
            g,
            DominationKind.TOTAL,
        )

    def test_errors(self) -> None:
        g = make_graph(3, [(0, 1)])
        self.assertEqual(domination.domination_number(g).value, 2)
        with self.assertRaises(EmptyEdgeError) as ctx:
            domination.total_domination_number(g)
        self.assertEqual(ctx.exception.vertex, 2)
        self.assertRaises(EmptyEdgeError, domination.paired_domination_number, g)
        self.assertRaises(
            EmptyEdgeError,
            domination.total_restrained_domination_number,
            g,
        )
        self.assertRaises(EmptyEdgeError, domination.total_domination_degree_bound, g)

        q5 = families.hypercube(5)
        with self.assertRaises(UndecidedError) as ctx_undecided:
            domination.domination_number(q5, budget=1)
        self.assertLessEqual(ctx_undecided.exception.lower, 7)
        self.assertGreaterEqual(ctx_undecided.exception.upper, 7)
        self.assertTrue(
            domination.is_dominating(q5, ctx_undecided.exception.witness),
        )

        self.assertRaises(
            UndecidedError,
            domination.paired_domination_number,
            families.cycle(7),
            search_budget=0,
        )

    def test_degree_bound(self) -> None:
        bound = domination.total_domination_degree_bound
        self.assertEqual(bound(families.hypercube(3)), 3)
        self.assertEqual(bound(families.cycle(7)), 4)
        self.assertEqual(bound(families.star(4)), 2)

    def test_doubling_construction(self) -> None:
        k1 = families.complete(1)
        d = domination.doubling_construction(k1, _vs(k1, [0]))
        self.assertEqual(d, VertexSet(2, 0b11))
        self.assertTrue(domination.is_total_dominating(prism(k1), d))

        c7 = families.cycle(7)
        d = domination.doubling_construction(c7, _vs(c7, [0, 3, 5]))
        self.assertEqual(len(d), 6)
        self.assertTrue(domination.is_total_dominating(prism(c7), d))
        self.assertTrue(domination.is_paired_dominating(prism(c7), d))

        q3 = families.hypercube(3)
        d = domination.doubling_construction(q3, _vs(q3, [0b000, 0b111]))
        self.assertEqual(len(d), 4)
        self.assertTrue(domination.is_total_dominating(families.hypercube(4), d))

        self.assertRaises(
            CertificateError,
            domination.doubling_construction,
            c7,
            _vs(c7, [0, 3]),
        )
        self.assertRaises(
            CertificateError,
            domination.doubling_construction,
            c7,
            VertexSet.full(8),
        )
