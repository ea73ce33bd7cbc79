"""Build hook for the optional Cython kernel extension.

The package works without it (NumPy fallback selected at import); set
POSLAB_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POSLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "poslab._kernels._core",
                    ["src/poslab/_kernels/_core.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
