"""Allow ``python -m ordered_coloring``."""

import sys

from ordered_coloring.cli import main

sys.exit(main())
