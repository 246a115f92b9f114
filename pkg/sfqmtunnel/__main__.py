import sys

from sfqmtunnel.cli import main

sys.exit(main())
