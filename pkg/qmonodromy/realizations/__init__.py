#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import copy
from pathlib import Path
from typing import Any, Dict

from qmonodromy.field import ExactField
from qmonodromy.generic.registry_utils import import_all_modules
from qmonodromy.monodromy import MonodromyRealization


FILE_ROOT = Path(__file__).parent


REALIZATION_REGISTRY = {}
REALIZATION_CLASS_NAMES = set()


def register_realization(name):
    """Registers a :class:`MonodromyRealization` subclass.

    This decorator allows a realization to be instantiated from a
    configuration file. To use it, apply this decorator to a
    MonodromyRealization subclass, like this:

    .. code-block:: python

      @register_realization('fock')
      class FockRealization(MonodromyRealization):
         ...

    To instantiate a realization from a configuration file, see
    :func:`build_realization`."""

    def register_realization_cls(cls):
        if name in REALIZATION_REGISTRY:
            raise ValueError("Cannot register duplicate realization ({})".format(name))
        if not issubclass(cls, MonodromyRealization):
            raise ValueError(
                "Realization ({}: {}) must extend MonodromyRealization".format(
                    name, cls.__name__
                )
            )
        if cls.__name__ in REALIZATION_CLASS_NAMES:
            raise ValueError(
                "Cannot register realization with duplicate class name ({})".format(
                    cls.__name__
                )
            )
        REALIZATION_REGISTRY[name] = cls
        REALIZATION_CLASS_NAMES.add(cls.__name__)
        return cls

    return register_realization_cls


def build_realization(config: Dict[str, Any], field: ExactField):
    """Builds a :class:`MonodromyRealization` acting over the given field.

    This assumes a 'name' key in the config which is used to determine what
    realization class to instantiate. For instance, a config
    `{"name": "frt", "num_sites": 2}` will find the class registered as "frt"
    and call .from_config on it."""
    assert config["name"] in REALIZATION_REGISTRY, (
        "Unregistered realization. Did you make sure to use the "
        "register_realization decorator AND import the realization file?"
    )
    config = copy.deepcopy(config)
    name = config.pop("name")
    return REALIZATION_REGISTRY[name].from_config(config, field)


# automatically import any Python files in the realizations/ directory
import_all_modules(FILE_ROOT, "qmonodromy.realizations")

from .fock_realization import FockRealization  # isort:skip
from .frt_realization import FrtRealization  # isort:skip

__all__ = [
    "FockRealization",
    "FrtRealization",
    "build_realization",
    "register_realization",
]
