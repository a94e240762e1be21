# -*- coding: utf-8 -*-

__version__ = "0.1"
__release__ = __version__ + ".0a1"
