"""Build script: compiles the optional fast-kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import sys

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    extensions = cythonize(
        [
            Extension(
                "gsc._kernels._ckern",
                ["src/gsc/_kernels/_ckern.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"gsc: skipping compiled kernels ({exc}); pure-Python fallback will be used",
          file=sys.stderr)
    extensions = []

setup(ext_modules=extensions)
