import sys

from hesse_flow.cli import main

sys.exit(main())
