"""Build hook for the optional compiled polynomial kernel.

`pip install` works without a compiler (pure fallback is selected at
import); `python setup.py build_ext --inplace` or an sdist build compiles
quatlab._poly_cy when Cython is available.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/quatlab/_poly_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
