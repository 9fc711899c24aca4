"""Builds the optional compiled clique kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so the build is marked optional and a failed compile only
costs performance.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "noncom._cliquer",
                ["src/noncom/_cliquer.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=extensions)
