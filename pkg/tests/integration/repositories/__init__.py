# -*- coding: utf-8 -*-
# tests/integration/repositories/__init__.py

# pylint: skip-file
