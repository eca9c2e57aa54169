"""Build the compiled state-sum kernel when Cython and a compiler are available.

Without them the package installs pure Python and ``skeinrt.skein`` falls back
to the interpreted kernel at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SKEINRT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("skeinrt.skein._statesum", ["src/skeinrt/skein/_statesum.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False, "cdivision": True},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
