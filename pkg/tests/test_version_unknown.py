import os
import sys
from importlib.metadata import PackageNotFoundError
from unittest.mock import patch


def _forget(*modules: str):
    for module in modules:
        sys.modules.pop(module, None)


def test_version_unknown():
    _forget("superorbit", "superorbit.version")

    with patch("importlib.metadata.version", side_effect=PackageNotFoundError):
        import superorbit

        assert superorbit.__version__ == "unknown"

    _forget("superorbit", "superorbit.version")
    import superorbit  # noqa: F401


def test_prefixed_variables_are_mirrored_on_import():
    _forget("superorbit")

    with patch.dict(os.environ, {"SUPERORBIT_LOG_LEVEL": "warning"}):
        import superorbit  # noqa: F401

        assert os.environ["LOG_LEVEL"] == "warning"

    _forget("superorbit")
    import superorbit  # noqa: F401, F811


def test_log_path_env():
    _forget("superorbit.log")

    with patch.dict(os.environ, {"SUPERORBIT_LOG_PATH": "/tmp/superorbit-test.log"}):
        import superorbit.log  # noqa: F401

        assert os.environ["PYTHON_LOG_PATH"] == "/tmp/superorbit-test.log"

    _forget("superorbit.log")
