import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = sorted(
    s for s in glob.glob("src/*.cpp") if not s.endswith("cli_main.cpp")
)

ext = Pybind11Extension(
    "ree2f4._core",
    sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
