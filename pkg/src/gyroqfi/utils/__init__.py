# -*- coding: utf-8 -*-

# Local Imports
from .converters import *
from .filenames import *
