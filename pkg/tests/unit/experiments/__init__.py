# -*- coding: utf-8 -*-
# tests/unit/experiments/__init__.py

# pylint: skip-file
