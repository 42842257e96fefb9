import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# Python twins in hyperdet._pykernels when the extension is missing.
# Set HYPERDET_NO_EXT=1 to skip compilation entirely.
ext_modules = []
if os.environ.get("HYPERDET_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hyperdet._speedups", ["src/hyperdet/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
