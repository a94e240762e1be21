# -*- coding: utf-8 -*-

# Local Imports
from .message import *
from .commands import *
from .events import *
