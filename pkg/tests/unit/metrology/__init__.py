# -*- coding: utf-8 -*-
# tests/unit/metrology/__init__.py

# pylint: skip-file
