#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from abc import ABC, abstractmethod
from enum import Enum


class HookFunctions(str, Enum):
    """The hook functions of VerificationHook, in call order."""

    on_start = "on_start"
    on_phase_start = "on_phase_start"
    on_step = "on_step"
    on_phase_end = "on_phase_end"
    on_end = "on_end"


class VerificationHook(ABC):
    """Base class for hooks.

    Hooks allow to inject behavior at different places of the verification
    loop, which are listed below in the chronological order.

        on_start -> on_phase_start ->
            on_step -> on_phase_end -> on_end

    A phase is one suite and a step is one check, so that on_step sees the
    reports of a single check in ``task.last_reports``.
    """

    @classmethod
    def from_config(cls, config) -> "VerificationHook":
        return cls(**config)

    def _noop(self, *args, **kwargs) -> None:
        """Derived classes can set their hook functions to this.

        This is useful if they want those hook functions to not do anything.

        """
        pass

    @classmethod
    def name(cls) -> str:
        """Returns the name of the class."""
        return cls.__name__

    @abstractmethod
    def on_start(self, task) -> None:
        """Called before the first suite."""
        pass

    @abstractmethod
    def on_phase_start(self, task) -> None:
        """Called at the start of each suite."""
        pass

    @abstractmethod
    def on_step(self, task) -> None:
        """Called each time a check has produced its reports."""
        pass

    @abstractmethod
    def on_phase_end(self, task) -> None:
        """Called at the end of each suite."""
        pass

    @abstractmethod
    def on_end(self, task) -> None:
        """Called after the last suite."""
        pass
