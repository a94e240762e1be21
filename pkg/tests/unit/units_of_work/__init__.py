# -*- coding: utf-8 -*-
# tests/unit/units_of_work/__init__.py

# pylint: skip-file
