# -*- coding: utf-8 -*-
# tests/unit/config/__init__.py

# pylint: skip-file
