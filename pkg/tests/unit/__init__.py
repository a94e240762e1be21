# -*- coding: utf-8 -*-
# tests/unit/__init__.py

# pylint: skip-file
