from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "rotadisc._rotadisc",
    sources=[
        "python/bindings.cpp",
        "src/combinatorics.cpp",
        "src/series.cpp",
        "src/umbral.cpp",
        "src/discretize.cpp",
        "src/galois.cpp",
        "src/catalog.cpp",
        "src/json_io.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
