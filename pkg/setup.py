"""Build script: compiles the optional cycle-search extension.

The package works without the extension (a pure-Python twin of the kernel is
selected at import time), so a missing compiler or Cython only costs speed.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cubeturan/_kernels/_cycles.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
