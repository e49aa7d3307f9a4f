import subprocess

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    try:
        out = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True, text=True, check=True,
        ).stdout
        return [flag[2:] for flag in out.split() if flag.startswith("-I")]
    except (OSError, subprocess.CalledProcessError):
        return ["/usr/include/eigen3"]


ext = Pybind11Extension(
    "zetacomb._zetacomb",
    sources=[
        "bindings/module.cpp",
        "src/specfun.cpp",
        "src/dirichlet.cpp",
        "src/tde.cpp",
        "src/measures.cpp",
        "src/io.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"] + eigen_include(),
    cxx_std=20,
)

setup(
    packages=["zetacomb"],
    package_dir={"zetacomb": "python/zetacomb"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
