"""Build script: compiles the optional segmentation kernel.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); the build therefore never fails on a missing
compiler.
"""

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: fall back to pure python
            print(f"modsel: skipping compiled kernel ({exc!r})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"modsel: skipping compiled kernel ({exc!r})")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "modsel._dpcore",
                ["src/modsel/_dpcore.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
