# -*- coding: utf-8 -*-

# pylint: skip-file
