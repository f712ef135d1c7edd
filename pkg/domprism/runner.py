"""External command runner, used for nauty's geng."""
from __future__ import annotations

import logging
import shutil
import subprocess
import typing as t
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import os

_LOGGER = logging.getLogger(__name__)


def available(cmd: str) -> bool:
    """True if cmd resolves to an executable on PATH."""
    return shutil.which(cmd) is not None


def run(
    cmd: str,
    args: t.List[str],
    cwd: t.Union[str, bytes, os.PathLike, None] = None,
) -> t.Tuple[str, int]:
    """Run a command and capture its output and return code.

    Args:
        cmd: Command to run
        args: Arguments to add to command
        cwd: Current working directory to run the command from

    Returns:
        stdout, return code
    """
    cmd_l = [cmd, *args]
    cmd_str = " ".join(cmd_l)
    _LOGGER.debug("Running '%s'", cmd_str)
    try:
        result = subprocess.run(
            cmd_l,  # noqa: S603
            capture_output=True,
            cwd=cwd,
            check=False,
        )
    except OSError:
        return f"Failed to run '{cmd_str}'", -1
    if result.returncode != 0:
        _LOGGER.debug("'%s' exited with %d", cmd_str, result.returncode)
    return result.stdout.strip().decode(), result.returncode
