# -*- coding: utf-8 -*-
# tests/unit/dynamics/__init__.py

# pylint: skip-file
