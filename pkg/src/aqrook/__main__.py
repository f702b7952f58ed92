import sys

from aqrook.cli import main

sys.exit(main())
