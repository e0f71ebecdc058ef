#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.


class QMonodromyError(Exception):
    """Base class for errors raised by the verification engine."""


class SingularWeight(QMonodromyError):
    """A quantum bracket [p_ij] used as a divisor vanishes at this weight."""


class NonGenericWeight(QMonodromyError):
    """A normal-ordering divisor [p_ij - 1] vanishes in the active field."""


class NoValidVariant(QMonodromyError):
    """No candidate FRT construction satisfies the exchange relations."""


class InconsistentModule(QMonodromyError):
    """A Fock state cannot be pulled back through the quantum determinant."""
