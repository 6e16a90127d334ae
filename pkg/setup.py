"""Build the optional compiled kernel extension.

The package works without the extension (a generated pure-Python twin of the
kernels is bundled); the Cython module just makes the hot dynamics kernels
roughly two orders of magnitude faster. Build failures therefore degrade to
a warning instead of aborting the install.
"""

import sys

from setuptools import Extension, setup


def make_extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("romopt: Cython not available, skipping compiled kernels", file=sys.stderr)
        return []
    try:
        return cythonize(
            [Extension("romopt._kernels", ["src/romopt/_kernels.pyx"])],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception as exc:
        print(f"romopt: kernel extension build skipped ({exc})", file=sys.stderr)
        return []


setup(ext_modules=make_extensions())
