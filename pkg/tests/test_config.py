from __future__ import annotations

from domprism import config
from domprism.errors import ConfigError
from tests import base


class TestConfig(base.TestBase):
    def test_defaults(self) -> None:
        c = config.Config()
        self.assertEqual(c.jobs, 1)
        self.assertEqual(c.node_budget, 50_000_000)
        self.assertEqual(c.search_budget, 50_000_000)
        self.assertFalse(c.bipartite_shortcut)
        self.assertEqual(c.audit_rate, 0.01)
        self.assertEqual(c.seed, 0)
        self.assertTrue(c.progress)

        self.assertRaises(ConfigError, config.Config, jobs=0)
        self.assertRaises(ConfigError, config.Config, node_budget=0)
        self.assertRaises(ConfigError, config.Config, audit_rate=1.5)

    def test_update(self) -> None:
        c = config.Config().update({"jobs": 4, "audit_rate": 1, "progress": False})
        self.assertEqual(c.jobs, 4)
        self.assertEqual(c.audit_rate, 1.0)
        self.assertIsInstance(c.audit_rate, float)
        self.assertFalse(c.progress)

        with self.assertRaises(ConfigError) as ctx:
            config.Config().update({"workers": 2}, "here.toml")
        self.assertIn("'workers' in here.toml", str(ctx.exception))
        self.assertRaises(ConfigError, config.Config().update, {"jobs": "4"})
        self.assertRaises(ConfigError, config.Config().update, {"jobs": True})
        self.assertRaises(ConfigError, config.Config().update, {"jobs": 2.0})
        self.assertRaises(ConfigError, config.Config().update, {"progress": 1})
        self.assertRaises(ConfigError, config.Config().update, {"jobs": -1})

    def test_load_config(self) -> None:
        root = self._TEST_ROOT

        ###### No files #####
        c = config.load_config(cwd=root, environ={})
        self.assertEqual(c, config.Config())

        ###### pyproject #####
        root.joinpath("pyproject.toml").write_text(
            '[project]\nname = "x"\n\n[tool.domprism]\njobs = 3\nseed = 9\n',
        )
        c = config.load_config(cwd=root, environ={})
        self.assertEqual(c.jobs, 3)
        self.assertEqual(c.seed, 9)

        ###### Explicit file wins over pyproject #####
        path = root.joinpath("domprism.toml")
        path.write_text("jobs = 5\nbipartite_shortcut = true\n")
        c = config.load_config(path, cwd=root, environ={})
        self.assertEqual(c.jobs, 5)
        self.assertEqual(c.seed, 9)
        self.assertTrue(c.bipartite_shortcut)

        ###### Environment wins over files #####
        c = config.load_config(path, cwd=root, environ={config.ENV_JOBS: "7"})
        self.assertEqual(c.jobs, 7)
        c = config.load_config(path, cwd=root, environ={config.ENV_JOBS: ""})
        self.assertEqual(c.jobs, 5)
        self.assertRaises(
            ConfigError,
            config.load_config,
            path,
            root,
            {config.ENV_JOBS: "many"},
        )
        self.assertRaises(
            ConfigError,
            config.load_config,
            path,
            root,
            {config.ENV_JOBS: "0"},
        )

        ###### Bad files #####
        self.assertRaises(
            ConfigError,
            config.load_config,
            root.joinpath("missing.toml"),
            root,
            {},
        )
        path.write_text("jobs = [\n")
        self.assertRaises(ConfigError, config.load_config, path, root, {})
        path.write_text("colour = true\n")
        self.assertRaises(ConfigError, config.load_config, path, root, {})
        root.joinpath("pyproject.toml").write_text("[tool.domprism]\njobs = 'x'\n")
        self.assertRaises(ConfigError, config.load_config, None, root, {})
