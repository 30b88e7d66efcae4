import sys

from setuptools import setup

# The compiled kernel is an optional accelerator: the package falls back to
# the pure-Python implementation in penrosekit._pure when it is missing.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "penrosekit._kernel",
                sources=["src/penrosekit/_kernel.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover
    print(f"penrosekit: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
