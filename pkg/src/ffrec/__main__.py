import sys

from ffrec.cli import main

sys.exit(main())
