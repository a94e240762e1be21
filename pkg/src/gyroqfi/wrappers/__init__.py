# -*- coding: utf-8 -*-

# Local Imports
from .abstract_file_wrappers import *
from .table_file_wrappers import *
from .json_file_wrappers import *
