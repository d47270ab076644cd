"""Version handling for superorbit."""

import importlib.metadata
from pathlib import Path


def is_local_source_checkout() -> bool:
    """True when running from a git checkout rather than an installed wheel."""
    # flat layout: the repo root is the parent of the package directory
    repo_root = Path(__file__).resolve().parent.parent

    return (repo_root / ".git").exists() and (repo_root / "pyproject.toml").exists()


def get_version() -> str:
    try:
        version = importlib.metadata.version("superorbit")
    except importlib.metadata.PackageNotFoundError:
        return "unknown"

    if not is_local_source_checkout() or version.endswith(".dev"):
        return version

    return f"{version}.dev"


__version__ = get_version()
