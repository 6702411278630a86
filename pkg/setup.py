"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a vectorized numpy
fallback is selected at import time), so the extension is marked optional
and a failed compile only degrades performance.
"""

import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cpnot._kernels",
                ["src/cpnot/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    warnings.warn("Cython not available; installing with the pure-python kernel only")

setup(ext_modules=ext_modules)
