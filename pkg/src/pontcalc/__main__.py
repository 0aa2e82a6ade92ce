import sys

from pontcalc.cli.main import main

sys.exit(main())
