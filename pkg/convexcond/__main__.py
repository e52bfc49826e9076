import sys

from convexcond.cli import main


sys.exit(main())
