"""Build the optional compiled bit kernel.

The package is fully functional without it (a pure-Python kernel is
selected at import time); building the extension speeds up bulk word and
window computations considerably.

    pip install -e . --no-build-isolation
    python setup.py build_ext --inplace   # extension only
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("beattyseq._bitkernel", ["src/beattyseq/_bitkernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
