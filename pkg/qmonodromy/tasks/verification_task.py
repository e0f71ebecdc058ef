#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import copy
import json
import logging
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
from qmonodromy.checks import (
    FAIL,
    SUITES,
    CheckReport,
    VerificationCheck,
    build_check,
    checks_for_suite,
)
from qmonodromy.epsilon import EpsTensor, EpsVariant, build_eps
from qmonodromy.field import CyclotomicField, ExactField, build_field
from qmonodromy.generic.errors import NoValidVariant
from qmonodromy.generic.perf_stats import PerfStats
from qmonodromy.generic.util import numpy_seed
from qmonodromy.hooks import build_hooks
from qmonodromy.monodromy import MonodromyRealization
from qmonodromy.realizations import FockRealization, FrtRealization
from qmonodromy.rmatrix import RMatrixPair, build_rmatrix_pair
from qmonodromy.weight import Weight
from qmonodromy.zeromodes import FockModule, Word

from . import register_task
from .qmonodromy_task import QMonodromyTask


# rejection sampling budget per requested test weight
MAX_WEIGHT_DRAWS = 50


@register_task("verification")
class VerificationTask(QMonodromyTask):
    """Runs the verification checks suite by suite.

    Every suite is a phase and every registered check of the suite is a
    step. The objects the checks work on (R-matrices, the zero-mode module,
    the realizations of the monodromy matrices) are built lazily and shared
    between the checks.

    A task is configured with setters, which return the task so that calls
    can be chained, or with :func:`from_config`.
    """

    def __init__(self):
        """Constructs a VerificationTask without a field, see :func:`set_field`"""
        super().__init__()

        self.field: Optional[ExactField] = None
        self.level = 2
        self.suites: List[str] = list(SUITES)
        self.check_names: Optional[List[str]] = None
        self.max_word_len: Optional[int] = None
        self.monodromy_word_len: Optional[int] = None
        self.frt_sites: List[int] = [1, 2]
        self.num_test_weights = 5
        self.seed = 0
        self.corrupt: Optional[str] = None
        self.perf_stats = PerfStats()
        self.reports: List[CheckReport] = []
        self.last_reports: List[CheckReport] = []
        self.phases: List[str] = []
        self.phase_idx = -1
        self.checks: Dict[str, List[Tuple[str, VerificationCheck]]] = {}
        self._pending: Iterator[Tuple[str, VerificationCheck]] = iter(())
        self._precomputed: Dict[str, List[CheckReport]] = {}
        self._rmatrices: Optional[RMatrixPair] = None
        self._test_weights: Optional[List[Weight]] = None
        self._module: Optional[FockModule] = None
        self._zero_mode_words: Optional[List[Word]] = None
        self._fock: Optional[FockRealization] = None
        self._frt: Dict[int, Any] = {}

    def set_field(self, field: ExactField):
        self.field = field
        if isinstance(field, CyclotomicField):
            self.level = field.k
        return self

    def set_level(self, level: int):
        assert level >= 1, "level k must be a positive integer"
        self.level = level
        return self

    def set_suites(self, suites: List[str]):
        for suite in suites:
            assert suite in SUITES, f"unknown suite {suite}, expected one of {SUITES}"
        self.suites = [suite for suite in SUITES if suite in suites]
        return self

    def set_check_names(self, check_names: Optional[List[str]]):
        """Restricts the run to the named checks; None runs all of them."""
        self.check_names = check_names
        return self

    def set_max_word_len(self, max_word_len: Optional[int]):
        assert max_word_len is None or max_word_len >= 0, "invalid word length"
        self.max_word_len = max_word_len
        return self

    def set_monodromy_word_len(self, monodromy_word_len: Optional[int]):
        self.monodromy_word_len = monodromy_word_len
        return self

    def set_frt_sites(self, frt_sites: List[int]):
        assert all(m >= 1 for m in frt_sites), "FRT needs at least one site"
        self.frt_sites = list(frt_sites)
        return self

    def set_num_test_weights(self, num_test_weights: int):
        self.num_test_weights = num_test_weights
        return self

    def set_seed(self, seed: int):
        self.seed = seed
        return self

    def set_corrupt(self, corrupt: Optional[str]):
        self.corrupt = corrupt
        if corrupt is not None:
            logging.warning(
                f"Corrupted convention {corrupt}: checks are expected to fail"
            )
        return self

    def set_hooks(self, hooks: List["VerificationHook"]):  # noqa: F821
        from qmonodromy.hooks import VerificationHook

        assert isinstance(hooks, list)
        assert all(isinstance(hook, VerificationHook) for hook in hooks)
        assert len({hook.name() for hook in hooks}) == len(
            hooks
        ), "Cannot have repeated hooks of the same class"
        self.hooks = hooks
        return self

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "VerificationTask":
        """Instantiates a VerificationTask from a configuration.

        Args:
            config: A configuration for a VerificationTask. The "field" entry
                is a field config (see :func:`qmonodromy.field.build_field`);
                see the setters for the other keys.

        Returns:
            A VerificationTask instance.
        """
        field_config = copy.deepcopy(config["field"])
        field = build_field(field_config)
        n = field.n
        hooks_config = config.get("hooks")
        hooks = build_hooks(hooks_config) if hooks_config is not None else []

        task = (
            cls()
            .set_field(field)
            .set_level(field_config.get("k", 2))
            .set_suites(config.get("suites", list(SUITES)))
            .set_check_names(config.get("checks"))
            .set_max_word_len(config.get("max_word_len", n + 1))
            .set_monodromy_word_len(config.get("monodromy_word_len", n))
            .set_frt_sites(config.get("frt_sites", [1, 2]))
            .set_num_test_weights(config.get("test_weights", 5))
            .set_seed(config.get("seed", 0))
            .set_corrupt(config.get("corrupt"))
            .set_hooks(hooks)
        )
        # NOTE: only used for logging and to rebuild the task in worker
        # processes, see __repr__ and ParallelRunner
        task._config = config
        return task

    # objects shared by the checks

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def rmatrices(self) -> RMatrixPair:
        if self._rmatrices is None:
            self._rmatrices = build_rmatrix_pair(self.field, self.corrupt)
        return self._rmatrices

    @property
    def test_weights(self) -> List[Weight]:
        """The vacuum weight and seeded random shifts of it: num_test_weights
        distinct weights at which no [p_ij] vanishes."""
        if self._test_weights is None:
            vacuum = Weight.vacuum(self.n)
            weights = [vacuum]
            seen = {vacuum}
            attempts = 0
            with numpy_seed(self.seed):
                while (
                    len(weights) < self.num_test_weights
                    and attempts < MAX_WEIGHT_DRAWS * self.num_test_weights
                ):
                    attempts += 1
                    shifts = np.random.randint(-3, 4, size=self.n)
                    weight = Weight.from_shifts([int(s) for s in shifts])
                    if weight in seen or weight.dq(self.field).is_zero():
                        continue
                    seen.add(weight)
                    weights.append(weight)
            if len(weights) < self.num_test_weights:
                logging.warning(
                    f"Only {len(weights)} of {self.num_test_weights} test weights "
                    f"are distinct and nonsingular"
                )
            self._test_weights = weights[: max(self.num_test_weights, 1)]
        return self._test_weights

    @property
    def module(self) -> FockModule:
        if self._module is None:
            self._module = FockModule(self.field)
        return self._module

    @property
    def zero_mode_words(self) -> List[Word]:
        if self._zero_mode_words is None:
            max_word_len = self.max_word_len
            if max_word_len is None:
                max_word_len = self.n + 1
            self._zero_mode_words = self.module.corpus(max_word_len)
            logging.info(
                f"Zero-mode corpus: {len(self._zero_mode_words)} states "
                f"of length <= {max_word_len}"
            )
        return self._zero_mode_words

    @property
    def fock(self) -> FockRealization:
        if self._fock is None:
            max_word_len = self.monodromy_word_len
            if max_word_len is None:
                max_word_len = self.n
            self._fock = FockRealization(
                self.field, max_word_len, self.rmatrices, self.corrupt, self.module
            )
        return self._fock

    def frt(self, num_sites: int) -> FrtRealization:
        """The FRT realization on num_sites auxiliary sites.

        Raises NoValidVariant, also on later calls, if no variant passes.
        """
        if num_sites not in self._frt:
            try:
                self._frt[num_sites] = FrtRealization(
                    self.field, num_sites, self.corrupt
                )
            except NoValidVariant as err:
                self._frt[num_sites] = err
        realization = self._frt[num_sites]
        if isinstance(realization, NoValidVariant):
            raise realization
        return realization

    def monodromy_realizations(self) -> List[Tuple[str, MonodromyRealization]]:
        realizations = [("fock", self.fock)]
        for num_sites in self.frt_sites:
            try:
                realizations.append((f"frt{num_sites}", self.frt(num_sites)))
            except NoValidVariant as err:
                logging.error(f"No FRT realization on {num_sites} site(s): {err}")
        return realizations

    def eps(self, variant: EpsVariant, weight: Optional[Weight] = None) -> EpsTensor:
        return build_eps(self.field, variant, weight, self.corrupt)

    def base_params(self) -> Dict[str, Any]:
        params = {"n": self.n, "mode": self.field.key[0]}
        if isinstance(self.field, CyclotomicField):
            params["k"] = self.field.k
        return params

    # running

    def prepare(self) -> None:
        assert self.field is not None, "the task needs a field"
        self.phases = list(self.suites)
        self.checks = {}
        for suite in self.phases:
            names = checks_for_suite(suite)
            if self.check_names is not None:
                names = [name for name in names if name in self.check_names]
            self.checks[suite] = [(name, build_check({"name": name})) for name in names]
        self.phase_idx = -1
        self.reports = []
        logging.info(f"Prepared {self.num_checks} checks in {len(self.phases)} suites")

    @property
    def num_checks(self) -> int:
        return sum(len(checks) for checks in self.checks.values())

    @property
    def phase(self) -> str:
        return self.phases[self.phase_idx]

    @property
    def num_steps_per_phase(self) -> int:
        return len(self.checks[self.phase])

    @property
    def where(self) -> float:
        total = self.num_checks
        if total == 0:
            return 0.0
        finished = self.phases[: max(self.phase_idx, 0)]
        done = sum(len(self.checks[suite]) for suite in finished)
        return min(done / total, 1.0 - 1e-9)

    def done(self) -> bool:
        return self.phase_idx + 1 >= len(self.phases)

    def advance_phase(self) -> None:
        self.phase_idx += 1
        self._pending = iter(self.checks[self.phase])
        logging.debug(f"Starting suite {self.phase}")

    def on_phase_start(self):
        self.advance_phase()
        super().on_phase_start()

    def set_precomputed(self, precomputed: Dict[str, List[CheckReport]]) -> None:
        """Reports computed elsewhere (e.g. in worker processes), used instead
        of running the named checks."""
        self._precomputed = dict(precomputed)

    def run_check(self, name: str) -> List[CheckReport]:
        return build_check({"name": name}).run(self)

    def run_step(self) -> None:
        name, check = next(self._pending)
        reports = self._precomputed.pop(name, None)
        if reports is None:
            reports = check.run(self)
        self.last_reports = reports
        self.reports.extend(reports)

    @property
    def failed(self) -> bool:
        return any(report.status == FAIL for report in self.reports)

    def __repr__(self):
        if hasattr(self, "_config"):
            config = json.dumps(self._config, indent=4)
            return f"{super().__repr__()} initialized with config:\n{config}"

        return super().__repr__()
