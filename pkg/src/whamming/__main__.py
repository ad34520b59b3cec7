import sys

from whamming.cli import main

sys.exit(main())
