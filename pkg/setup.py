"""Build hook for the optional compiled kernels.

The package is fully functional without the extension; commlab.kernels falls
back to the pure-Python implementation when the compiled module is missing.
"""

import os

from setuptools import setup

ext_modules = []
_pyx = os.path.join("src", "commlab", "_kernels.pyx")
if os.path.exists(_pyx):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize([_pyx], language_level=3)
    except ImportError:
        pass

setup(ext_modules=ext_modules)
