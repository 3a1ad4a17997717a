"""Build script for the optional compiled kernel.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build degrades to the pure-Python kernels.
Set BUNDLE_CENSUS_PURE_PYTHON=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: compiled kernels not built ({exc}); "
              "falling back to pure-Python kernels")


def extensions():
    if os.environ.get("BUNDLE_CENSUS_PURE_PYTHON") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; building without compiled kernels")
        return []
    ext = Extension(
        "bundle_census._kernels_c",
        ["src/bundle_census/_kernels_c.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
