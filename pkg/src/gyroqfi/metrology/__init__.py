# -*- coding: utf-8 -*-

# Local Imports
from .gaussian_state import *
from .output_state import *
from .qfi import *
