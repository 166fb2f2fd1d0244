import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("ALTPRIME_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("altprime._kernels", ["src/altprime/_kernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        # no Cython available: install with the pure-python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
