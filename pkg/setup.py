"""
Install galoislines
"""
from __future__ import print_function
from setuptools import setup


with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

# Define the minimal classes needed to install and run galoislines
INSTALL_REQUIRES = ["numpy>=1.17.0", "scipy>=1.3.0", "six", "sympy>=1.5"]
# Define all the possible extras needed
EXTRAS_REQUIRE = {
    "all": [
        "mpi4py>=3.0",         # parallel scans in run_galois_lines.py
    ]
}

# Define the packages needed for testing
TESTS_REQUIRE = ["pytest"]
EXTRAS_REQUIRE["test"] = TESTS_REQUIRE
# Define the extras needed for development
EXTRAS_REQUIRE["dev"] = EXTRAS_REQUIRE["all"] + TESTS_REQUIRE

# Run the setup
setup(
    name="galoislines",
    version="0.1.0",
    packages=["galoislines"],
    license="GNU General Public License v3.0",
    description="Galois lines of elliptic quartic curves in P^3",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="elliptic curves, Galois lines, algebraic geometry, "
             "projective geometry",
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    test_suite="tests",
    tests_require=TESTS_REQUIRE,
    entry_points={
        "console_scripts": ["galoislines=galoislines.cli:main"],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License "
        ":: OSI Approved "
        ":: GNU General Public License v3 or later (GPLv3+)",
        "Programming Language :: Python",
    ],
)
