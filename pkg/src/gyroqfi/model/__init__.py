# -*- coding: utf-8 -*-

# Local Imports
from .physical_params import *
from .rates import *
