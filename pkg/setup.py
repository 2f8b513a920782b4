"""Build script for the optional compiled kernel.

The package is fully functional without the extension: `infolattice._kernels`
falls back to a pure-Python implementation when `_core` is missing (or when
INFOLATTICE_PURE=1 is set).  Building the extension requires Cython and a C
compiler; if either is unavailable the install proceeds without it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "infolattice._kernels._core",
                ["src/infolattice/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
