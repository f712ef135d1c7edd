from __future__ import annotations

from pathlib import Path

TEST_LOG = Path("test_log.json").resolve()
