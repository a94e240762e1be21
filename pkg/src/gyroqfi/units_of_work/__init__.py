# -*- coding: utf-8 -*-

# Local Imports
from .abstract_unit_of_work import *
from .output_unit_of_work import *
