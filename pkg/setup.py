import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TORICSING_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("toricsing._kernels", ["src/toricsing/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
