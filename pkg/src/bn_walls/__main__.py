"""Module entry point for `python -m bn_walls`."""

import sys

from bn_walls.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
