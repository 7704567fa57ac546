"""Build script: compiles the optional group-kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed compile only costs speed.  Set
PRIGID_SKIP_EXT=1 to force a pure build.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PRIGID_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "prigid.groups._ckern",
                    ["src/prigid/groups/_ckern.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
