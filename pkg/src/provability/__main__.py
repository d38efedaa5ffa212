import sys

from provability.cli import main

sys.exit(main())
