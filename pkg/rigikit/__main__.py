import sys

from rigikit.main import main

sys.exit(main())
