"""Build script.  The Cython scan kernel is an optional accelerator: if it
cannot be built (no compiler, no Cython), the package installs anyway and
falls back to the pure Python kernel at import time."""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
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
        print(f"warning: building the scan kernel failed ({exc}); "
              "normloc will use the pure Python fallback", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("normloc._scan", ["src/normloc/_scan.pyx"])],
        compiler_directives={"language_level": 3},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
