#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.


from abc import ABC, abstractmethod
from typing import Any, Dict

from qmonodromy.hooks.verification_hook import HookFunctions


class QMonodromyTask(ABC):
    """
    An abstract base class for a verification task.

    A QMonodromyTask encapsulates all the objects and steps needed to verify
    a set of identities using a :class:`qmonodromy.runner.VerificationRunner`.
    The runner drives phases and steps; the task decides what a step does.
    """

    def __init__(self) -> "QMonodromyTask":
        """
        Constructs a QMonodromyTask.
        """
        self.hooks = []

    @classmethod
    @abstractmethod
    def from_config(cls, config: Dict[str, Any]) -> "QMonodromyTask":
        """Instantiates a QMonodromyTask from a configuration.

        Args:
            config: A configuration for a QMonodromyTask.

        Returns:
            A QMonodromyTask instance.
        """
        raise NotImplementedError()

    @property
    @abstractmethod
    def where(self) -> float:
        """
        Tells how far along (where) we are during the run.

        Returns:
            A float in [0, 1) which tells the progress.
        """
        pass

    @abstractmethod
    def done(self) -> bool:
        """
        Tells if every phase has run.
        """
        pass

    @abstractmethod
    def prepare(self) -> None:
        """
        Prepares the task for running.

        Will be called by the :class:`qmonodromy.runner.VerificationRunner`
        before on_start is called.
        """
        pass

    @abstractmethod
    def run_step(self) -> None:
        """
        Runs a single step of the current phase.

        Raises StopIteration when the phase has no more steps.
        """
        pass

    def step(self) -> None:
        self.run_step()
        self.run_hooks(HookFunctions.on_step.name)

    def on_start(self):
        self.run_hooks(HookFunctions.on_start.name)

    def on_phase_start(self):
        self.run_hooks(HookFunctions.on_phase_start.name)

    def on_phase_end(self):
        self.run_hooks(HookFunctions.on_phase_end.name)

    def on_end(self):
        self.run_hooks(HookFunctions.on_end.name)

    def run_hooks(self, hook_function: str) -> None:
        """
        Runs a hook function for all the
        :class:`qmonodromy.hooks.VerificationHook`.

        Args:
            hook_function: One of the hook functions in the
                :class:`qmonodromy.hooks.HookFunctions` enum.
        """
        for hook in self.hooks:
            getattr(hook, hook_function)(self)
