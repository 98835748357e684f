import sys

from semiphoton_lab.cli import main

sys.exit(main())
