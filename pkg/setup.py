"""Build script: compiles the optional fast curve kernel.

The package works without the extension (a pure-Python backend is selected
at import time), so the build is marked optional and any compiler failure
degrades to the slow path instead of breaking the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cluagg._ecfast",
                ["src/cluagg/_ecfast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

for ext in extensions:
    ext.optional = True

setup(ext_modules=extensions)
