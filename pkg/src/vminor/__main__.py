import sys

from vminor.cli import main

sys.exit(main())
