#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from pathlib import Path

from qmonodromy.generic.registry_utils import import_all_modules

from .qmonodromy_task import QMonodromyTask


FILE_ROOT = Path(__file__).parent


TASK_REGISTRY = {}
TASK_CLASS_NAMES = set()


def build_task(config):
    """Builds a QMonodromyTask from a config.

    This assumes a 'name' key in the config which is used to determine what
    task class to instantiate. For instance, a config `{"name": "verification",
    "field": {...}}` will find a class that was registered as "verification"
    (see :func:`register_task`) and call .from_config on it."""

    assert config["name"] in TASK_REGISTRY, f"unknown task {config['name']}"
    return TASK_REGISTRY[config["name"]].from_config(config)


def register_task(name):
    """Registers a QMonodromyTask subclass.

    This decorator allows a subclass of QMonodromyTask to be instantiated
    from a configuration file. To use it, apply this decorator to a
    QMonodromyTask subclass, like this:

    .. code-block:: python

        @register_task('my_task')
        class MyTask(QMonodromyTask):
            ...

    To instantiate a task from a configuration file, see :func:`build_task`."""

    def register_task_cls(cls):
        if name in TASK_REGISTRY:
            raise ValueError("Cannot register duplicate task ({})".format(name))
        if not issubclass(cls, QMonodromyTask):
            raise ValueError(
                "Task ({}: {}) must extend QMonodromyTask".format(name, cls.__name__)
            )
        if cls.__name__ in TASK_CLASS_NAMES:
            raise ValueError(
                "Cannot register task with duplicate class name ({})".format(
                    cls.__name__
                )
            )
        TASK_REGISTRY[name] = cls
        TASK_CLASS_NAMES.add(cls.__name__)
        return cls

    return register_task_cls


from .verification_task import VerificationTask  # isort:skip

__all__ = ["QMonodromyTask", "VerificationTask", "build_task", "register_task"]

# automatically import any Python files in the tasks/ directory
import_all_modules(FILE_ROOT, "qmonodromy.tasks")
