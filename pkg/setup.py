"""Build script for the optional C speedups extension.

The package is fully functional without the extension: nfcinv._kernels
falls back to the pure-Python implementation when the compiled module
is missing (or when NFCINV_PURE_PYTHON is set).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    speedups = Extension(
        "nfcinv._kernels._speedups",
        sources=["src/nfcinv/_kernels/_speedups.pyx"],
        optional=True,
    )
    ext_modules = cythonize(
        [speedups],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
