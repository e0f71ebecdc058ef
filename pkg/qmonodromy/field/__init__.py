#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from pathlib import Path

from qmonodromy.generic.registry_utils import import_all_modules

from .exact_field import ExactField, Scalar


FILE_ROOT = Path(__file__).parent


FIELD_REGISTRY = {}


def build_field(config):
    """Builds an :class:`ExactField` from a config.

    This assumes a 'name' key in the config which is used to determine what
    field class to instantiate. For instance, a config `{"name": "cyclotomic",
    "n": 2, "k": 1}` will find the class registered as "cyclotomic" (see
    :func:`register_field`) and call .from_config on it."""
    assert config["name"] in FIELD_REGISTRY, f"Unknown field mode {config['name']}"
    return FIELD_REGISTRY[config["name"]].from_config(config)


def register_field(name):
    """Registers an :class:`ExactField` subclass.

    This decorator allows a field to be instantiated from a configuration
    file. To use it, apply this decorator to an ExactField subclass, like
    this:

    .. code-block:: python

        @register_field('cyclotomic')
        class CyclotomicField(ExactField):
            ...

    To instantiate a field from a configuration file, see
    :func:`build_field`."""

    def register_field_cls(cls):
        if name in FIELD_REGISTRY:
            raise ValueError("Cannot register duplicate field ({})".format(name))
        if not issubclass(cls, ExactField):
            raise ValueError(
                "Field ({}: {}) must extend ExactField".format(name, cls.__name__)
            )
        FIELD_REGISTRY[name] = cls
        return cls

    return register_field_cls


# automatically import any Python files in the field/ directory
import_all_modules(FILE_ROOT, "qmonodromy.field")

from .cyclotomic_field import CyclotomicField  # isort:skip
from .rational_function_field import RationalFunctionField  # isort:skip

__all__ = [
    "CyclotomicField",
    "ExactField",
    "RationalFunctionField",
    "Scalar",
    "build_field",
    "register_field",
]
