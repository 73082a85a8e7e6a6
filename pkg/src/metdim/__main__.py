import sys

from metdim.cli import main

sys.exit(main())
