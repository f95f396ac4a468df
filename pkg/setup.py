import codecs
import os
import re

from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))


def read(*parts):
    with codecs.open(os.path.join(here, *parts), "r") as fp:
        return fp.read()


def find_version(*file_paths):
    version_file = read(*file_paths)
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


with open("requirements.txt") as file:
    install_requires = file.read().splitlines()

setup(
    name="homdensity",
    version=find_version("homdensity", "__init__.py"),
    # License
    license="Apache License Version 2.0",
    packages=find_packages(exclude=["*.tests", "*.tests.*", "tests.*", "tests"]),
    # Include additional files into the package
    include_package_data=True,
    # Details
    description="Exact graph homomorphism counts and densities",
    long_description="homdensity counts the homomorphisms between two finite simple graphs exactly and reports the "
    "homomorphism density, the probability that a uniformly random vertex mapping preserves every edge. "
    "Counting dispatches to closed-form fast paths for edgeless and complete graphs and falls back to a "
    "pruned backtracking search, checked against a brute-force enumeration oracle. "
    "A command-line tool reads graph6 and edge-list files, verifies known density bounds over seeded "
    "random corpora, benchmarks the engine against the oracle and generates corpora.",
    classifiers=[
        "License :: OSI Approved :: Apache Software License",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: POSIX",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: Microsoft :: Windows",
    ],
    keywords="graph homomorphism density graph6 combinatorics counting coloring clique",
    python_requires=">=3.8",
    install_requires=install_requires,
    entry_points={"console_scripts": ["homdensity = homdensity.cli:main"]},
    tests_require=["mock", "hypothesis"],
    test_suite="homdensity.tests",
)
