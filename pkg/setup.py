"""Builds the optional compiled elimination kernel.

If Cython or a C compiler is missing the package still installs and runs on
the numpy fallback.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("ASCURVE_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "ascurve._kernels",
                    ["src/ascurve/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover
        print(f"warning: building without the compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
