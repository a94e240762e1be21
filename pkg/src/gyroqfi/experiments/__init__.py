# -*- coding: utf-8 -*-

# Local Imports
from .sweep_spec import *
from .executors import *
from .studies import *
