"""Build script: compiles the optional LOESS extension.

The extension is a performance twin of a pure-Python module, so a failed
compile (missing compiler, no Cython) downgrades to the fallback instead
of failing the install. -ffp-contract=off keeps the compiled arithmetic
bit-identical to the interpreter's.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        print("lexsent: Cython not available; installing with the pure-Python kernel",
              file=sys.stderr)
        return []
    extra = [] if sys.platform == "win32" else ["-O2", "-ffp-contract=off"]
    return cythonize(
        [Extension("lexsent._loess_cy", ["src/lexsent/_loess_cy.pyx"],
                   extra_compile_args=extra)],
        compiler_directives={"language_level": "3"},
    )


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"lexsent: extension build failed ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"lexsent: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
