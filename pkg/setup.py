"""Build script: compiles the elimination kernel when Cython is available.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), so the build degrades gracefully on systems
with no C toolchain.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "soclekit._kernels._elim",
                ["src/soclekit/_kernels/_elim.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
