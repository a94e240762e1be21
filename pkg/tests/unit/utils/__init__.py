# -*- coding: utf-8 -*-
# tests/unit/utils/__init__.py

# pylint: skip-file
