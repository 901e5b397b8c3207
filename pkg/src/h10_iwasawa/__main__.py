"""``python -m h10_iwasawa`` entry point."""

import sys

from .cli import main

sys.exit(main())
