# -*- coding: utf-8 -*-
# tests/integration/__init__.py

# pylint: skip-file
