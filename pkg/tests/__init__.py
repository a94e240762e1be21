# -*- coding: utf-8 -*-
# tests/__init__.py

# pylint: skip-file
