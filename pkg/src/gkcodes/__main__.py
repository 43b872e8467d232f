import sys

from gkcodes.cli import main

sys.exit(main())
