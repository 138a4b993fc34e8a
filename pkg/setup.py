# `pip install -e . --no-build-isolation` or `python setup.py build_ext --inplace`
import os

import numpy as np
from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class optional_build_ext(build_ext):
    """Skip the compiled kernels when no compiler is available; the package falls back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernels not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc}); using pure-Python fallback")


ext_modules = []
if not os.environ.get("RISKGRAPH_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("riskgraph._ckernels", ["src/riskgraph/_ckernels.pyx"],
                       include_dirs=[np.get_include()], extra_compile_args=["-O3"],
                       define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
