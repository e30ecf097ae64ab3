from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "nilact._boxcount",
                ["src/nilact/_boxcount.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Without Cython the package still installs; the oracle falls back to
    # the pure-Python counting kernel.
    ext_modules = []

setup(ext_modules=ext_modules)
