#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from functools import lru_cache, wraps

from qmonodromy.field import CyclotomicField, RationalFunctionField


class Arguments(object):
    """Object that looks like input arguments. Used to spoof argparse namespace."""

    def __init__(self, **args):
        self.args = args
        self.__dict__.update(args)

    def __iter__(self):
        return iter(self.args)

    def __eq__(self, other):
        if isinstance(other, Arguments):
            return self.args == other.args
        else:
            return NotImplemented

    def _asdict(self):
        return vars(self)


@lru_cache(maxsize=None)
def generic_field(n=2):
    """Formal q, shared between tests since building sympy fields is slow."""
    return RationalFunctionField(n)


@lru_cache(maxsize=None)
def cyclotomic_field(n=2, k=1):
    return CyclotomicField(n, k)


def verify_args(**overrides):
    """Namespace with the defaults of the command-line parser."""
    args = {
        "config_file": None,
        "n": None,
        "level": None,
        "mode": None,
        "suite": None,
        "max_word_len": None,
        "emit": None,
        "jobs": 1,
        "allow_large_n": False,
        "corrupt": None,
        "show_progress": False,
        "log_level": "INFO",
    }
    args.update(overrides)
    return Arguments(**args)


def assert_operators_equal(test_fixture, lhs, rhs):
    """Fails with the first mismatching entry."""
    difference = lhs.first_difference(rhs)
    message = None
    if difference is not None:
        upper, lower, left, right = difference
        message = f"entry {upper}{lower}: {left} != {right}"
    test_fixture.assertIsNone(difference, message)


def assert_states_equal(test_fixture, lhs, rhs):
    difference = lhs.first_difference(rhs)
    test_fixture.assertIsNone(
        difference,
        None
        if difference is None
        else f"coefficient of {difference[0]}: {difference[1]} != {difference[2]}",
    )


def repeat_test(original_function=None, *, num_times=3):
    """Decorator that can be used to repeat test multiple times."""

    def repeat_test_decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            for _ in range(num_times):
                func(*args, **kwargs)

        return wrapper

    # this handles default arguments to decorator:
    if original_function:
        return repeat_test_decorator(original_function)
    return repeat_test_decorator
