"""Build script: compiles the optional path-enumeration extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set NETCURV_NO_EXT=1 to skip compilation explicitly.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("NETCURV_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/netcurv/_pathkernel.pyx"],
            language_level=3,
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
