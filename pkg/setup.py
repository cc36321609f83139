"""Build the optional Cython kernel; the package works without it."""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

# strict IEEE evaluation so the compiled kernel matches the Python fallback
COMPILE_ARGS = [] if sys.platform == "win32" else ["-O2", "-ffp-contract=off"]


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, no Cython, ...
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc})")


def extensions():
    if os.environ.get("DUALHYP_NO_EXTENSION") == "1":
        return []
    pyx = os.path.join("src", "dualhyp", "_kernels.pyx")
    try:
        from Cython.Build import cythonize
    except ImportError:
        c_file = pyx[:-4] + ".c"
        if not os.path.exists(c_file):
            return []
        return [Extension("dualhyp._kernels", [c_file], extra_compile_args=COMPILE_ARGS)]
    ext = Extension("dualhyp._kernels", [pyx], extra_compile_args=COMPILE_ARGS)
    return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
