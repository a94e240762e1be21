# -*- coding: utf-8 -*-

# Local Imports
from .states import *
from .classical import *
from .drift import *
from .sensitivity import *
from .integrator import *
