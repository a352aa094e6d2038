"""Build script for the optional compiled CTRW kernel.

The package is pure Python plus one Cython extension for the continuous-time
random-walk event loop.  The extension is marked optional: if Cython or a C
compiler is unavailable the install still succeeds and the pure-Python kernel
(same algorithm, same RNG) is used at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "slhmix._ctrw",
                ["src/slhmix/_ctrw.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
