# -*- coding: utf-8 -*-
# tests/integration/wrappers/__init__.py

# pylint: skip-file
