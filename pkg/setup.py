"""Build the optional compiled kernels.  Without Cython the package installs
pure Python and ``toricbordism.kernels`` falls back automatically."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TORICBORDISM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("toricbordism._ckernels",
                       sources=["src/toricbordism/_ckernels.pyx"],
                       language="c++",
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
