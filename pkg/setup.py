"""Build hook for the optional compiled kernels.

The extension is marked optional: if Cython or a C compiler is unavailable
the package installs without it and falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("blowcalc._ckernels", ["src/blowcalc/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
