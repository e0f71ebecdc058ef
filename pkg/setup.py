#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.


import os
import re
import sys

from setuptools import find_packages, setup


if __name__ == "__main__":
    if sys.version_info < (3, 6):
        sys.exit("Sorry, Python >=3.6 is required for qmonodromy.")

    # get version string from module
    with open(
        os.path.join(os.path.dirname(__file__), "qmonodromy/__init__.py"), "r"
    ) as f:
        version = re.search(r"__version__ = ['\"]([^'\"]*)['\"]", f.read(), re.M).group(
            1
        )
        print("-- Building version " + version)

    with open("README.md", encoding="utf8") as f:
        readme = f.read()

    with open("requirements.txt") as f:
        reqs = f.read()

    setup(
        name="qmonodromy",
        version=version,
        description=(
            "Exact-arithmetic verification of the zero modes and monodromy "
            "matrices of the SU(n) WZNW model."
        ),
        long_description_content_type="text/markdown",
        long_description=readme,
        license="MIT License",
        python_requires=">=3.6",
        packages=find_packages(exclude=("test", "test.*")),
        install_requires=reqs.strip().split("\n"),
        extras_require={
            "progress": ["progressbar2"],
            "dev": ["black==19.3b0", "isort", "pre-commit"],
        },
        package_data={"qmonodromy": ["configs/*.json"]},
        data_files=[("qmonodromy", ["qmonodromy_verify.py"])],
        include_package_data=True,
        test_suite="test.suites.unittests",
        scripts=["qmonodromy_verify.py"],
        keywords=["quantum groups", "WZNW", "exact arithmetic", "verification"],
        classifiers=[
            "Programming Language :: Python :: 3",
            "Programming Language :: Python :: 3.6",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Development Status :: 3 - Alpha",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Topic :: Scientific/Engineering :: Physics",
        ],
    )
