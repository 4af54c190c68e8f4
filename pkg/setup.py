"""Build script: compiles the optional reduction-kernel extension.

The package is pure Python; `germlab._speedups` is a Cython twin of
`germlab._purekernel` used automatically when importable.  Any build
failure (no Cython, no C compiler) downgrades to the pure wheel.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: ship pure python
            print(f"germlab: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"germlab: skipping compiled kernel ({exc})")


ext_modules = []
if os.environ.get("GERMLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("germlab._speedups", ["src/germlab/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
