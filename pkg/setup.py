"""Build script for the optional compiled solver kernel.

The package is pure Python except for splitbp._solver_core, a Cython
version of the branch-and-bound inner loop. If the extension cannot be
built the package still works: the solver falls back to the pure-Python
kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "splitbp._solver_core",
                ["src/splitbp/_solver_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
