# -*- coding: utf-8 -*-

# Standard Library Imports
import sys

# Local Imports
from .cli import main

if __name__ == "__main__":
    sys.exit(main())
