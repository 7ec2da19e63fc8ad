import sys

from tqc.cli import main

sys.exit(main())
