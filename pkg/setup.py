import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("SKCURVE_NO_EXT"):
        return []
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:
        # the numpy fallback in skcurve._kernels_py is used instead
        return []
    ext = Extension(
        "skcurve._kernels",
        ["src/skcurve/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
