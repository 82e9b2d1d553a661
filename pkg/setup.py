#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# SPDX-License-Identifier: Apache-2.0
#
from setuptools import find_packages, setup

# Installed by pip install homenum
# or pip install -e .
install_requirements = [
    "bumpversion",
    "coverage",
    "enforce_typing",
    "mypy",
    "networkx",
    "numpy",
    "pandas",
    "pylint",
    "pytest",
    "pytest-env",
    "pyyaml",
    "types-PyYAML",
]

# Required to run setup.py:
setup_requirements = ["pytest-runner"]

with open("README.md", encoding="utf8") as readme_file:
    readme = readme_file.read()

setup(
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3.8",
    ],
    description="Polynomial-delay enumeration of homomorphisms between relational structures",
    entry_points={"console_scripts": ["homenum=homenum.cli.main:do_main"]},
    install_requires=install_requirements,
    name="homenum",
    license="Apache Software License 2.0",
    long_description=readme,
    long_description_content_type="text/markdown",
    include_package_data=True,
    packages=find_packages(
        include=[
            "homenum",
            "homenum.*",
        ]
    ),
    setup_requires=setup_requirements,
    test_suite="homenum",
    # fmt: off
    # bumpversion needs single quotes
    version='0.0.1',
    # fmt: on
    zip_safe=False,
)
