# -*- coding: utf-8 -*-

# Local Imports
from .fock import *
from .lindblad import *
