# -*- coding: utf-8 -*-

# Local Imports
from .abstract_repository import *
from .artifact_repository import *
