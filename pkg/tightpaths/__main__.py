import sys

from tightpaths.cli import main

sys.exit(main())
