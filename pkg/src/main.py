"""
Main entry point for qmonogamy
"""

import sys

from dotenv import load_dotenv

# .env values must be in the environment before the numerics config is read
load_dotenv()

from utils.logger import setup_logging  # noqa: E402
from qmonogamy.cli import run  # noqa: E402


def main() -> int:
    setup_logging()
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
