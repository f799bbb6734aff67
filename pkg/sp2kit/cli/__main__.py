import sys

from sp2kit.cli.main import main

sys.exit(main())
