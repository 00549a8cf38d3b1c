"""Build script.

The bitmask kernels have a compiled Cython implementation; if Cython or a C
compiler is unavailable the build falls back to the pure-Python kernels and
the package still works (kernels.py picks whichever is importable).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/matrofan/_fastkernels.pyx"], language_level="3"
    )
except Exception as exc:  # pragma: no cover
    print(f"building without compiled kernels: {exc}")

setup(ext_modules=ext_modules)
