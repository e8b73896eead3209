"""Builds the optional compiled reduction kernels.

The package is fully functional without a C toolchain: tfu._kernels falls
back to a bit-identical numpy implementation when the extension is absent.
"""

from setuptools import Extension, find_packages, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tfu._kernels._cascade",
                ["src/tfu/_kernels/_cascade.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

# package_dir/packages restate the src layout so the extension build also
# works under setuptools versions that ignore pyproject [project] tables
setup(
    ext_modules=ext_modules,
    package_dir={"": "src"},
    packages=find_packages("src"),
)
