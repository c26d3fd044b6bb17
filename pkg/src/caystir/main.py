"""
caystir console script.

Exposes ``start`` for the ``caystir`` entry point declared in pyproject.toml.
"""

import sys

from caystir.cli import run


def start() -> None:
    """Run the command line and exit with its status code."""
    sys.exit(run())


if __name__ == "__main__":
    start()
