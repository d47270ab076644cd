import logging
import os
import sys

import structlog
from structlog_config import configure_logger


def setup_logging():
    # structlog-config only knows about PYTHON_LOG_PATH
    if log_path := os.environ.get("SUPERORBIT_LOG_PATH"):
        os.environ["PYTHON_LOG_PATH"] = log_path

    # sympy's polys domain chatter is never useful in sweep logs
    logging.getLogger("sympy").setLevel(logging.WARNING)

    return configure_logger(
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr)
    )


log = setup_logging()
