from __future__ import annotations

import io
import json
import logging
import typing as t
from unittest import mock

from domprism import cli, corpus, domination, families, runner
from domprism.graph import make_graph
from domprism.graph6 import encode_graph6
from domprism.vertexset import VertexSet
from tests import base


class TestCLI(base.TestBase):
    def tearDown(self) -> None:
        logger = logging.getLogger("domprism")
        logger.handlers = []
        logger.setLevel(logging.NOTSET)
        logger.propagate = True
        super().tearDown()

    def _run(
        self,
        *argv: str,
        stdin: str = "",
    ) -> t.Tuple[int, str, str]:
        out = io.StringIO()
        err = io.StringIO()
        with mock.patch("sys.stdout", out), mock.patch("sys.stderr", err), mock.patch(
            "sys.stdin",
            io.StringIO(stdin),
        ):
            code = cli.cli_main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def _write(self, name: str, lines: t.List[str]) -> str:
        path = self._TEST_ROOT.joinpath(name)
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    def test_invariant(self) -> None:
        code, out, _ = self._run("invariant", "--graph", "Q4", "--kind", "gamma")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, "4\n")

        code, out, _ = self._run(
            "invariant",
            "--graph",
            "C7",
            "--kind",
            "gammat",
            "--prism",
        )
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, "5\n")

        code, out, _ = self._run(
            "invariant",
            "--graph",
            "C7",
            "--kind",
            "gamma",
            "--witness",
        )
        self.assertEqual(code, cli.EXIT_OK)
        value, members = out.splitlines()
        self.assertEqual(value, "3")
        witness = VertexSet.of(7, map(int, members.split()))
        self.assertTrue(domination.is_dominating(families.cycle(7), witness))

        code, out, _ = self._run("invariant", "--graph", "A_", "--kind", "gammatr")
        self.assertEqual((code, out), (cli.EXIT_OK, "2\n"))
        code, out, _ = self._run("invariant", "--graph", "Bw", "--kind", "gammapr")
        self.assertEqual((code, out), (cli.EXIT_OK, "2\n"))

        ###### Errors #####
        code, out, err = self._run("invariant", "--graph", "B", "--kind", "gamma")
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("Truncated", err)
        code, _, _ = self._run("invariant", "--graph", "A?", "--kind", "gammat")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, _ = self._run("invariant", "--graph", "Q4", "--kind", "nope")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, _ = self._run(
            "invariant",
            "--graph",
            "Q5",
            "--kind",
            "gamma",
            "--budget",
            "1",
        )
        self.assertEqual(code, cli.EXIT_UNDECIDED)
        code, _, _ = self._run(
            "invariant",
            "--graph",
            "Q5",
            "--kind",
            "gamma",
            "--budget",
            "0",
        )
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_usage(self) -> None:
        code, _, _ = self._run()
        self.assertEqual(code, cli.EXIT_USAGE)
        code, out, _ = self._run("--version")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertNotEqual(out.strip(), "")
        code, _, _ = self._run("frobnicate")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, err = self._run(
            "--config",
            str(self._TEST_ROOT.joinpath("missing.toml")),
            "witness",
            "--name",
            "prop1",
        )
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertIn("Cannot read config", err)

        with mock.patch("sys.argv", ["domprism", "witness", "--name", "prop1"]):
            with mock.patch("sys.stdout", io.StringIO()):
                with self.assertRaises(SystemExit) as ctx:
                    cli.main()
        self.assertEqual(ctx.exception.code, cli.EXIT_OK)

    def test_scan(self) -> None:
        c7 = encode_graph6(families.cycle(7))
        path = self._write("small.g6", [">>graph6<<A_", "Bw", "", c7])

        ###### CSV #####
        code, out, err = self._run("scan", "--input", path, "--no-progress")
        self.assertEqual(code, cli.EXIT_OK)
        rows = out.splitlines()
        self.assertEqual(rows[0], ",".join(cli.census.CSV_COLUMNS))
        self.assertEqual(rows[1], "0,A_,2,1,2,1,0,2,1")
        self.assertEqual(rows[3], f"2,{c7},7,3,5,0,1,5,3")
        self.assertEqual(len(rows), 4)
        self.assertIn("total 3, perfect 2, non-perfect 1, undecided 0", err)

        ###### JSON and report #####
        report_path = self._TEST_ROOT.joinpath("report.json")
        code, out, _ = self._run(
            "scan",
            "--generate",
            "4",
            "--out",
            "json",
            "--report",
            str(report_path),
        )
        self.assertEqual(code, cli.EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(doc["report"]["total_graphs"], 6)
        self.assertEqual(len(doc["records"]), 6)
        self.assertEqual(json.loads(report_path.read_text()), doc["report"])

        ###### stdin, shortcut and jobs #####
        code, out, _ = self._run(
            "scan",
            "--input",
            "-",
            "--bipartite-shortcut",
            "--jobs",
            "2",
            stdin="A_\nBw\n",
        )
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 3)

        ###### Undecided #####
        q5 = encode_graph6(families.hypercube(5))
        path = self._write("hard.g6", ["A_", q5])
        code, out, _ = self._run("scan", "--input", path, "--undecided-budget", "1")
        self.assertEqual(code, cli.EXIT_UNDECIDED)
        self.assertTrue(out.splitlines()[2].startswith(f"1,{q5},32,,"))

        ###### Errors #####
        code, _, _ = self._run("scan", "--input", str(self._TEST_ROOT.joinpath("no")))
        self.assertEqual(code, cli.EXIT_USAGE)
        path = self._write("bad.g6", ["A_", "B"])
        code, _, err = self._run("scan", "--input", path)
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertIn("line 2", err)
        code, _, _ = self._run("scan", "--input", path, "--generate", "3")
        self.assertEqual(code, cli.EXIT_USAGE)
        with mock.patch.object(runner, "available", return_value=False):
            code, _, _ = self._run("scan", "--geng", "5")
        self.assertEqual(code, cli.EXIT_USAGE)

        tokens = [encode_graph6(g) for g in corpus.connected_graphs(3)]
        with mock.patch.object(corpus, "geng_tokens", return_value=tokens):
            code, out, _ = self._run("scan", "--geng", "3")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 3)

    def test_verify(self) -> None:
        code, out, err = self._run("verify", "spot-products", "--quick")
        self.assertEqual(code, cli.EXIT_OK)
        reports = json.loads(out)
        self.assertEqual(len(reports), 1)
        self.assertEqual(reports[0]["suite"], "spot-products")
        self.assertEqual(reports[0]["status"], "pass")
        self.assertIn("spot-products: pass", err)

        code, _, _ = self._run("verify")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, _ = self._run("verify", "spot-products", "--all")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, _ = self._run("verify", "nope")
        self.assertEqual(code, cli.EXIT_USAGE)

        # An order-8 graph with γ_t(prism)/γ = 4/3 fails the ratio suite
        edges = [(0, 4), (0, 5), (1, 4), (1, 6), (2, 5)]
        edges += [(2, 7), (3, 6), (3, 7), (4, 7), (5, 6)]
        token = encode_graph6(make_graph(8, edges))
        path = self._write("order8.g6", [token])
        code, out, err = self._run(
            "verify",
            "ratio-problem",
            "--quick",
            "--input",
            path,
        )
        self.assertEqual(code, cli.EXIT_FAILED)
        below = json.loads(out)[0]["checks"][2]
        self.assertEqual(below["name"], f"graphs below 3/2 in {path}")
        self.assertEqual(below["computed"], [f"{token} 4/3"])
        self.assertIn("ratio-problem: fail", err)

        code, out, _ = self._run(
            "verify",
            "onh-structure",
            "--quick",
            "--samples",
            "4",
            "--seed",
            "3",
        )
        self.assertEqual(code, cli.EXIT_OK)

    def test_construct(self) -> None:
        code, out, _ = self._run("construct", "--family", "C5")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, encode_graph6(families.cycle(5)) + "\n")

        code, out, _ = self._run("construct", "--family", "P3", "--emit", "edges")
        self.assertEqual(out, "3 2\n0 1\n1 2\n")

        code, out, _ = self._run("construct", "--family", "K1", "--prism")
        self.assertEqual(out, "A_\n")

        code, _, _ = self._run("construct", "--family", "Z9")
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_witness(self) -> None:
        code, out, _ = self._run("witness", "--name", "prop1", "--param", "1")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out, "0 2 7 9 12\n")

        code, out, _ = self._run("witness", "--name", "hamming", "--param", "2")
        self.assertEqual(out, "0 7\n")

        code, out, _ = self._run("witness", "--name", "figure")
        figure = " ".join(map(str, families.claimB_witness(6)))
        self.assertEqual(out, figure + "\n")

        code, _, _ = self._run("witness", "--name", "claimB", "--param", "1")
        self.assertEqual(code, cli.EXIT_USAGE)
        code, _, _ = self._run("witness", "--name", "nope")
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_logging(self) -> None:
        logger = logging.getLogger("domprism")
        for verbosity, level in [
            (-1, logging.ERROR),
            (0, logging.WARNING),
            (1, logging.INFO),
            (3, logging.DEBUG),
        ]:
            cli.setup_logging(verbosity)
            self.assertEqual(logger.level, level)
            self.assertEqual(len(logger.handlers), 1)
            self.assertFalse(logger.propagate)

        formatter = cli.ColorFormatter("%(levelname)s %(message)s")
        record = logging.LogRecord("domprism", logging.ERROR, "", 0, "bad", None, None)
        text = formatter.format(record)
        self.assertIn("ERROR", text)
        self.assertIn("bad", text)
        self.assertNotEqual(text, "ERROR bad")
        self.assertEqual(record.levelname, "ERROR")

        code, _, err = self._run("-v", "witness", "--name", "prop1")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("prop1(1): 5 vertices", err)
