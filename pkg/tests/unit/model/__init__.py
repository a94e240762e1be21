# -*- coding: utf-8 -*-
# tests/unit/model/__init__.py

# pylint: skip-file
