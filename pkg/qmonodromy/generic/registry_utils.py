#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import importlib
import logging
import sys
from pathlib import Path


def import_all_modules(root, base_module):
    """Imports every public module of a registry package so that their
    register_* decorators run."""
    for path in sorted(Path(root).glob("*.py")):
        if path.name.startswith("_"):
            continue
        module_name = f"{base_module}.{path.stem}"
        if module_name not in sys.modules:
            importlib.import_module(module_name)


def import_all_packages_from_directory(root):
    """Imports the packages found directly under root.

    Used by the verification script so that packages placed next to it can
    register extra checks, fields or hooks. For instance, with
        root / my_checks / __init__.py
        root / my_checks / commutators.py
        root / notes.py

    the package my_checks is imported, notes is not."""
    for path in sorted(Path(root).iterdir()):
        name = path.name
        if not path.is_dir() or "." in name or name in sys.modules:
            continue
        try:
            importlib.import_module(name)
            logging.debug(f"Imported user package {name}")
        except ModuleNotFoundError:
            pass
