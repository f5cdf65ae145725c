"""Builds the optional Cython speedups.

The package is pure Python first: if Cython (or a C compiler) is missing,
the build falls back to the interpreted kernels with identical behavior.
"""
import os
from setuptools import setup

PYX = "src/balanced_forge/_speedups.pyx"

ext_modules = []
if os.environ.get("BALANCED_FORGE_NO_EXT") != "1" and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize([PYX], language_level=3)
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
