#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import contextlib
import json
import logging
from typing import Any, Dict, List, Optional

import numpy as np
from fvcore.common.file_io import PathManager


def is_pos_int(number):
    """
    Returns True if number is an int >= 0 (bools excluded).
    """
    return type(number) == int and number >= 0


@contextlib.contextmanager
def numpy_seed(seed: Optional[int]):
    """Seeds the NumPy PRNG inside the context and restores the previous
    state on exit. A None seed leaves the PRNG alone."""
    if seed is None:
        yield
        return
    state = np.random.get_state()
    np.random.seed(seed)
    try:
        yield
    finally:
        np.random.set_state(state)


def load_json(json_path: str) -> Dict[str, Any]:
    """
    Loads a JSON task config.
    """
    assert PathManager.exists(json_path), "Json file %s not found" % json_path
    with PathManager.open(json_path, "r") as f:
        try:
            return json.load(f)
        except ValueError as err:
            raise ValueError(f"Invalid JSON in {json_path}: {err}") from err


def save_json_lines(records: List[Dict[str, Any]], path: str) -> None:
    """Writes one JSON object per line, UTF-8 encoded."""
    with PathManager.open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record, sort_keys=True, ensure_ascii=False))
            f.write("\n")
    logging.info(f"Wrote {len(records)} records to {path}")


def load_json_lines(path: str) -> List[Dict[str, Any]]:
    """Reads a file written by :func:`save_json_lines`."""
    assert PathManager.exists(path), "Report file %s not found" % path
    with PathManager.open(path, "r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]
