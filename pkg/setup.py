"""Build shim for the optional compiled Smith normal form kernel.

The package is pure Python plus one Cython extension. When Cython or a C
compiler is missing the extension is skipped and the pure implementation
is used at runtime, so the build must never hard-fail here.
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
                "coxartin._snfcore",
                ["src/coxartin/_snfcore.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
