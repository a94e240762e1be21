# -*- coding: utf-8 -*-

# Local Imports
from .abstract_progress_bar import *
