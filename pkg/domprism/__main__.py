"""Allow python -m domprism."""
from __future__ import annotations

from domprism.cli import main

main()
