"""Build script: compiles the optional C kernel extension.

The package works without the extension (a pure-Python implementation of the
same kernels is selected at import time), so a missing compiler or Cython
only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "freemultiflow._ckernels",
                sources=["src/freemultiflow/_ckernels.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
