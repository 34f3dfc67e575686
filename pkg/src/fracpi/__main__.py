import sys

from fracpi.cli import main

sys.exit(main())
