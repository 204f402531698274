"""Build the optional compiled kernel; the package falls back to the
pure-Python kernels when the extension is unavailable."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lemidx.kernels._speedups",
                   ["src/lemidx/kernels/_speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
