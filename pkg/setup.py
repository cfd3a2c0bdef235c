"""Build script.

The compiled scan kernel is optional: if Cython or a C compiler is
missing the build still succeeds and the package falls back to the
pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("wtgraph._fastscan", ["src/wtgraph/_fastscan.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
