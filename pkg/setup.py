import os

from setuptools import setup

ext_modules = []
if os.environ.get("METABELIAN_GS_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            "src/metabelian_gs/_ckernels.pyx",
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
