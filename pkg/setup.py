import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("KHOVBASIS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("khovbasis._kernels", ["src/khovbasis/_kernels.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
