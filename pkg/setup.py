"""Build the optional compiled kernel.

The Cython extension accelerates component counting; the package falls back
to the pure-Python kernel when the extension is unavailable, so a failed
compile is downgraded to a warning rather than an install failure.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hedgegraphs/_kernels/_ckern.pyx"],
        language_level=3,
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
except Exception as exc:  # no compiler / no Cython: pure kernel still works
    warnings.warn(f"compiled kernel skipped: {exc}")
    ext_modules = []

setup(ext_modules=ext_modules)
