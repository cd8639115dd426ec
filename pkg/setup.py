import os

from setuptools import setup

# The compiled kernel is optional: without Cython (or with TWOHOP_PURE=1)
# the package installs anyway and twohop.kernels falls back to numpy.
ext_modules = []
if os.environ.get("TWOHOP_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/twohop/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
