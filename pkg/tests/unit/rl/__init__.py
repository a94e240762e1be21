# -*- coding: utf-8 -*-
# tests/unit/rl/__init__.py

# pylint: skip-file
