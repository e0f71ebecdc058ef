#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import copy
from pathlib import Path
from typing import Any, Dict, List

from qmonodromy.generic.registry_utils import import_all_modules

from .check_report import FAIL, PASS, SKIPPED, CheckReport, format_table
from .verification_check import Outcome, VerificationCheck


FILE_ROOT = Path(__file__).parent

SUITES = ("rmatrix", "epsilon", "zeromodes", "monodromy", "frt")

CHECK_REGISTRY = {}
CHECK_CLASS_NAMES = set()


def register_check(name):
    """Registers a :class:`VerificationCheck` subclass.

    This decorator allows a check to be instantiated from a configuration
    file. To use it, apply this decorator to a VerificationCheck subclass,
    like this:

    .. code-block:: python

      @register_check('braid')
      class BraidCheck(VerificationCheck):
         suite = "rmatrix"
         ...

    Checks run in the order they were registered within their suite. To
    instantiate a check from a configuration file, see :func:`build_check`."""

    def register_check_cls(cls):
        if name in CHECK_REGISTRY:
            raise ValueError("Cannot register duplicate check ({})".format(name))
        if not issubclass(cls, VerificationCheck):
            raise ValueError(
                "Check ({}: {}) must extend VerificationCheck".format(
                    name, cls.__name__
                )
            )
        if cls.__name__ in CHECK_CLASS_NAMES:
            raise ValueError(
                "Cannot register check with duplicate class name ({})".format(
                    cls.__name__
                )
            )
        if cls.suite not in SUITES:
            raise ValueError(
                "Check ({}) has unknown suite ({})".format(name, cls.suite)
            )
        CHECK_REGISTRY[name] = cls
        CHECK_CLASS_NAMES.add(cls.__name__)
        return cls

    return register_check_cls


def build_check(config: Dict[str, Any]) -> VerificationCheck:
    """Builds a :class:`VerificationCheck` from a config.

    This assumes a 'name' key in the config which is used to determine what
    check class to instantiate. For instance, a config `{"name": "hecke"}`
    will find the class registered as "hecke" and call .from_config on it."""
    assert config["name"] in CHECK_REGISTRY, f"unknown check {config['name']}"
    config = copy.deepcopy(config)
    name = config.pop("name")
    return CHECK_REGISTRY[name].from_config(config)


def checks_for_suite(suite: str) -> List[str]:
    assert suite in SUITES, f"unknown suite {suite}"
    return [name for name, cls in CHECK_REGISTRY.items() if cls.suite == suite]


from .rmatrix_checks import BraidCheck  # isort:skip
from .epsilon_checks import EpsRhatCheck  # isort:skip
from .zeromode_checks import ExchangeRelationCheck  # isort:skip
from .monodromy_checks import VacuumCheck  # isort:skip
from .frt_checks import FrtVariantCheck  # isort:skip

# automatically import any Python files in the checks/ directory
import_all_modules(FILE_ROOT, "qmonodromy.checks")

__all__ = [
    "CHECK_REGISTRY",
    "FAIL",
    "PASS",
    "SKIPPED",
    "SUITES",
    "CheckReport",
    "Outcome",
    "VerificationCheck",
    "build_check",
    "checks_for_suite",
    "format_table",
    "register_check",
]
