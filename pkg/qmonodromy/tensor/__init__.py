#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from .site_operator import SiteOperator, flatten_index, unflatten_index
from .sparse_vector import SparseVector


__all__ = ["SiteOperator", "SparseVector", "flatten_index", "unflatten_index"]
