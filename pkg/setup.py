"""Build the optional Cython kernel; the package works without it."""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(["src/superverge/_kernel_c.pyx"],
                            language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
