import sys

from catalan_ears.cli import main

sys.exit(main())
