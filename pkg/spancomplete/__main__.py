"""Run the command line with ``python -m spancomplete``."""

import sys

from .cli import main

sys.exit(main())
