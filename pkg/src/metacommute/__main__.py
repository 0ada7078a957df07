import sys

from metacommute.cli import main

sys.exit(main())
