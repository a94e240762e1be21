# -*- coding: utf-8 -*-
# tests/unit/oracle/__init__.py

# pylint: skip-file
