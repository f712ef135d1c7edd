"""Module version information.

setup.py sets use_witch_ver, so building from a git checkout rewrites this
file with the version of the latest tag. version_dict must stay a plain
literal, it is read back when building outside of git.
"""
from __future__ import annotations

__all__ = ["__version__"]

version_dict = {
    "tag": None,
    "tag_prefix": "v",
    "sha": None,
    "sha_abbrev": None,
    "branch": None,
    "date": None,
    "dirty": None,
    "distance": None,
    "pretty_str": "0+untagged.0.g",
    "git_dir": None,
}

__version__: str = version_dict.get("pretty_str", "0+untagged.0.g")
