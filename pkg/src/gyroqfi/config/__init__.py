# -*- coding: utf-8 -*-

# Local Imports
from .schema import *
from .run_config import *
