# -*- coding: utf-8 -*-

# Local Imports
from .environments import *
from .networks import *
from .advantages import *
from .ppo import *
from .snapshots import *
from .training import *
