"""Build hook for the optional compiled kernels.

The package is fully functional without the extension (ncotor.kernels falls
back to the pure-Python implementations); set NCOTOR_NO_EXT=1 to skip the
build explicitly.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("NCOTOR_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [Extension("ncotor._speedups", ["src/ncotor/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
