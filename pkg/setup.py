"""Build script: compiles the optional speedup extension when Cython is present.

The package works without the extension; `spardisc._kernels` falls back to
pure-Python/numpy implementations selected at import time.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "spardisc._kernels._speed",
                sources=["src/spardisc/_kernels/_speed.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
