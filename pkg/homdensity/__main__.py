import sys

from homdensity.cli import main

sys.exit(main())
