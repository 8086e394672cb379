import os

from setuptools import Extension, setup

# The compiled kernels are an optional accelerator: if Cython (or a C
# compiler) is unavailable the package installs anyway and falls back to the
# pure-Python kernels at import time.  Set IRRLAB_PURE=1 to skip the build.
ext_modules = []
if os.environ.get("IRRLAB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "irrlab._scan_cy",
                    ["src/irrlab/_scan_cy.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
