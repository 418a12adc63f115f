#!/usr/bin/env python
"""
Command-line runner for quasigrow.

Loads the .env file at the repository root before the package reads its
settings, then hands the arguments to quasigrow.cli.

Usage:
  python run_quasigrow.py grow --seed 1 --length 4
  python run_quasigrow.py verify ABABAB
  python run_quasigrow.py deceptions --window 12 --max-len 13
  python run_quasigrow.py selftest --quick
"""
import os
import sys

import dotenv

# Load environment variables from .env file
dotenv.load_dotenv(os.path.join(os.path.dirname(os.path.abspath(__file__)), '.env'))

from quasigrow.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
